"""
Pruebas de la interfaz de línea de comandos.
"""

import io
import json
import sys
from pathlib import Path

import pandas as pd
import pytest
from click.testing import CliRunner

# Agregar el directorio raíz al path
sys.path.append(str(Path(__file__).parent))

from cli import cli
from config.settings import settings


@pytest.fixture
def runner():
    return CliRunner()


def _json(resultado):
    assert resultado.exit_code == 0, resultado.output
    return json.loads(resultado.stdout)


def test_run_gauss_oraculo_01(runner):
    filas = _json(runner.invoke(cli, ["run", "--oracle", "01", "--method", "gauss", "--format", "json"]))
    assert filas == [{
        "oracle": "01",
        "method": "gauss",
        "classification": "Balanced",
        "queries": 1,
        "witness": "-2",
    }]


def test_run_cuantico_todos_los_oraculos(runner):
    filas = _json(runner.invoke(cli, ["run", "--oracle", "all", "--method", "quantum", "--format", "json"]))
    assert [f["witness"] for f in filas] == ["(0,1,0,0)", "(0,0,0,1)", "(0,0,0,1)", "(0,1,0,0)"]
    assert [f["classification"] for f in filas] == ["Constant", "Balanced", "Balanced", "Constant"]
    assert all(f["queries"] == 1 for f in filas)


def test_run_referencia_dos_consultas(runner):
    filas = _json(runner.invoke(cli, ["run", "--oracle", "00", "--method", "baseline", "--format", "json"]))
    assert filas[0]["classification"] == "Constant"
    assert filas[0]["queries"] == 2
    assert filas[0]["witness"] == "(0,0)"


def test_run_orden_de_reportes(runner):
    filas = _json(runner.invoke(cli, ["run", "--oracle", "10", "--method", "all", "--format", "json"]))
    assert [f["method"] for f in filas] == ["baseline", "quantum", "gauss", "gauss-family", "surd"]
    assert {f["oracle"] for f in filas} == {"10"}


def test_run_familia_con_parametro(runner):
    filas = _json(runner.invoke(
        cli, ["run", "--oracle", "00", "--method", "family", "--a", "-3/7", "--format", "json"]
    ))
    assert filas[0]["method"] == "gauss-family"
    assert filas[0]["witness"] == "-6/7i"
    assert filas[0]["classification"] == "Constant"


def test_run_familia_variante_plus(runner):
    filas = _json(runner.invoke(
        cli, ["run", "--oracle", "all", "--method", "family", "--sign", "plus", "--format", "json"]
    ))
    assert [f["classification"] for f in filas] == ["Constant", "Balanced", "Balanced", "Constant"]


def test_run_surd(runner):
    filas = _json(runner.invoke(cli, ["run", "--oracle", "all", "--method", "surd", "--format", "json"]))
    assert [f["witness"] for f in filas] == ["-3+2√2", "1", "-1", "3-2√2"]


@pytest.mark.parametrize("argumentos", [
    ["run", "--oracle", "2", "--method", "gauss"],
    ["run", "--oracle", "01", "--method", "grover"],
    ["run", "--oracle", "01", "--method", "family", "--a", "x/2"],
    ["run", "--oracle", "01", "--method", "family", "--sign", "times"],
    ["run", "--oracle", "01", "--method", "gauss", "--format", "xml"],
])
def test_run_errores_de_uso(runner, argumentos):
    resultado = runner.invoke(cli, argumentos)
    assert resultado.exit_code == 2


def test_run_rechaza_a_cero(runner):
    resultado = runner.invoke(cli, ["run", "--oracle", "01", "--method", "family", "--a", "0"])
    assert resultado.exit_code == 2
    assert "distinto de cero" in resultado.output


def test_run_a_enorme_reporta_desbordamiento(runner):
    # 2**62 es válido pero el producto a(i-1)·C_f(1+i) sale del rango
    resultado = runner.invoke(cli, ["run", "--oracle", "00", "--method", "family", "--a", str(2**62)])
    assert resultado.exit_code == 1
    assert "Error:" in resultado.output
    assert not isinstance(resultado.exception, OverflowError)


def test_run_a_solo_importa_en_familia(runner):
    resultado = runner.invoke(cli, ["run", "--oracle", "01", "--method", "gauss", "--a", "0"])
    assert resultado.exit_code == 0


def test_run_muestreo(runner):
    resultado = runner.invoke(
        cli, ["run", "--oracle", "all", "--method", "quantum", "--sample", "7", "100"]
    )
    assert resultado.exit_code == 0
    assert "sample oracle=00 seed=7 shots=100: out1=0 out2=100 out3=0 out4=0" in resultado.stdout
    assert "sample oracle=01 seed=7 shots=100: out1=0 out2=0 out3=0 out4=100" in resultado.stdout


def test_tabla_csv(runner):
    resultado = runner.invoke(cli, ["table", "--format", "csv"])
    assert resultado.exit_code == 0
    assert resultado.stdout.splitlines()[0] == "oracle,method,classification,queries,witness"

    tabla = pd.read_csv(io.StringIO(resultado.stdout), dtype=str)
    assert len(tabla) == 20
    gauss = tabla[tabla["method"] == "gauss"]
    assert list(gauss["oracle"]) == ["00", "01", "10", "11"]
    assert list(gauss["witness"]) == ["2i", "-2", "2", "-2i"]


def test_tabla_json(runner):
    filas = _json(runner.invoke(cli, ["table", "--format", "json"]))
    assert len(filas) == 20
    for fila in filas:
        assert set(fila) == {"oracle", "method", "classification", "queries", "witness"}
        assert fila["queries"] == (2 if fila["method"] == "baseline" else 1)


def test_tabla_texto(runner):
    resultado = runner.invoke(cli, ["table"])
    assert resultado.exit_code == 0
    for testigo in ("2i", "-2", "-2i", "(0,1,0,0)", "-3+2√2", "3-2√2"):
        assert testigo in resultado.stdout


def test_tabla_determinista(runner):
    for formato in ("text", "csv", "json"):
        primera = runner.invoke(cli, ["table", "--format", formato]).stdout
        segunda = runner.invoke(cli, ["table", "--format", formato]).stdout
        assert primera == segunda


def test_tabla_formato_desconocido(runner):
    resultado = runner.invoke(cli, ["table", "--format", "yaml"])
    assert resultado.exit_code != 0


def test_traza(runner):
    resultado = runner.invoke(cli, ["trace", "--oracle", "01"])
    assert resultado.exit_code == 0
    assert "U_fHV   = (1/2,-1/2,-1/2,1/2)" in resultado.stdout
    assert "HU_fHV  = (0,0,0,1)" in resultado.stdout
    assert "result  = Balanced" in resultado.stdout
    assert "queries = 1" in resultado.stdout


def test_traza_todos(runner):
    resultado = runner.invoke(cli, ["trace"])
    assert resultado.exit_code == 0
    assert resultado.stdout.count("oracle ") == 4


def test_traza_oraculo_invalido(runner):
    assert runner.invoke(cli, ["trace", "--oracle", "111"]).exit_code == 2


def test_selftest_limpio(runner):
    resultado = runner.invoke(cli, ["selftest"])
    assert resultado.exit_code == 0, resultado.output
    assert "all checks passed" in resultado.stdout
    assert "0 failed" in resultado.stdout


def test_selftest_hadamard_mutada(runner):
    resultado = runner.invoke(cli, ["selftest", "--mutate", "hadamard"])
    assert resultado.exit_code == 1
    assert "FAIL [quantum] H unitaria" in resultado.stdout
    assert "all checks passed" not in resultado.stdout


def test_selftest_decision_mutada(runner):
    resultado = runner.invoke(cli, ["selftest", "--mutate", "decision"])
    assert resultado.exit_code == 1
    assert "FAIL [dequant]" in resultado.stdout


def test_version(runner):
    resultado = runner.invoke(cli, ["--version"])
    assert resultado.exit_code == 0
    assert settings.VERSION in resultado.output
