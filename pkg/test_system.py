"""
Pruebas del Sistema Deutsch completo.
Recorre el orquestador, las validaciones y la autoverificación sin pasar por la CLI.
"""

import sys
from pathlib import Path

import pytest
from loguru import logger

# Agregar el directorio raíz al path
sys.path.append(str(Path(__file__).parent))

from main import SistemaDeutsch
from services.oracle_service import BitFn, Classification
from utils.exactnum import Rat
from utils.report_generator import RunReport, formatear_tupla, parsear_testigo
from utils.validators import DataValidator


@pytest.fixture(scope="module")
def sistema():
    return SistemaDeutsch()


def test_inicializacion(sistema):
    """Prueba la inicialización del sistema."""
    logger.info("🧪 Probando inicialización del sistema")

    stats = sistema.obtener_estadisticas_sistema()
    assert stats["version"]
    assert stats["configuracion"]["int_bits"] == 64
    assert stats["formatos"] == ["text", "csv", "json"]


def test_validaciones():
    """Prueba las validaciones del sistema."""
    validator = DataValidator()

    assert validator.validar_oraculo("01")["valido"]
    assert len(validator.validar_oraculo(" ALL ")["oraculos"]) == 4
    assert validator.validar_oraculo("12")["codigo_error"] == "INVALID_ORACLE"

    assert validator.validar_metodo("family")["metodos"] == ["gauss-family"]
    invalido = validator.validar_metodo("gauss-family")
    assert invalido["codigo_error"] == "INVALID_METHOD"
    assert "family" in invalido["error"]

    assert validator.validar_parametro_a("-3/7")["a"] == Rat(-3, 7)
    assert validator.validar_parametro_a("0")["codigo_error"] == "ZERO_PARAMETER"
    assert validator.validar_parametro_a("1/0")["codigo_error"] == "INVALID_RATIONAL"
    assert validator.validar_parametro_a("99999999999999999999")["codigo_error"] == "INVALID_RATIONAL"
    # Entradas largas se leen completas, sin recortar
    assert validator.validar_parametro_a("3/" + "0" * 61 + "14")["a"] == Rat(3, 14)
    assert validator.validar_parametro_a("0" * 64 + "3/7")["a"] == Rat(3, 7)

    assert validator.validar_signo("PLUS")
    assert not validator.validar_signo("times")
    assert validator.sanitizar_texto("0\x001\n") == "01"


def test_tabla_completa(sistema):
    reportes = sistema.tabla_completa()
    assert len(reportes) == 20
    assert [(r.oracle, r.method) for r in reportes[:5]] == [
        ("00", "baseline"), ("00", "quantum"), ("00", "gauss"), ("00", "gauss-family"), ("00", "surd")
    ]
    for reporte in reportes:
        fn = BitFn(int(reporte.oracle[0]), int(reporte.oracle[1]))
        assert reporte.classification == fn.kind


def test_testigos_ida_y_vuelta(sistema):
    for reporte in sistema.tabla_completa():
        valor = parsear_testigo(reporte)
        texto = formatear_tupla(valor) if isinstance(valor, tuple) else str(valor)
        assert texto == reporte.witness


def test_consultas_igual_al_delta_del_contador(sistema):
    reporte = sistema.ejecutar_metodo(BitFn(1, 1), "baseline")
    assert reporte.queries == 2
    reporte = sistema.ejecutar_metodo(BitFn(1, 1), "surd")
    assert reporte.queries == 1


def test_ejecutar_error_devuelve_dict(sistema):
    resultado = sistema.ejecutar("01", "family", a="abc")
    assert resultado["codigo_error"] == "INVALID_RATIONAL"
    assert "reportes" not in resultado


def test_ejecutar_familia_con_a_largo(sistema):
    resultado = sistema.ejecutar("00", "family", a="3/" + "0" * 61 + "14")
    assert resultado["reportes"][0].witness == "3/7i"


def test_run_report_valida_campos():
    with pytest.raises(ValueError):
        RunReport(oracle="2", method="gauss", classification=Classification.CONSTANT, queries=1, witness="2i")
    with pytest.raises(ValueError):
        RunReport(oracle="01", method="grover", classification=Classification.CONSTANT, queries=1, witness="2i")


def test_renderizar_formato_desconocido(sistema):
    with pytest.raises(ValueError):
        sistema.report_generator.renderizar(sistema.tabla_completa(), "xml")


def test_trazar(sistema):
    resultado = sistema.trazar("all")
    assert [etiqueta for etiqueta, _, _ in resultado["trazas"]] == ["00", "01", "10", "11"]
    assert all(consultas == 1 for _, _, consultas in resultado["trazas"])


def test_muestrear(sistema):
    assert sistema.muestrear(BitFn(0, 1), semilla=3, disparos=10) == {1: 0, 2: 0, 3: 0, 4: 10}


def test_autoverificacion(sistema):
    resumen = sistema.autoverificar()
    assert resumen.ok, [f"{r.modulo}: {r.nombre}: {r.detalle}" for r in resumen.fallidas]
    assert resumen.total > 20


@pytest.mark.parametrize("mutacion", ["hadamard", "decision"])
def test_autoverificacion_mutada_falla(sistema, mutacion):
    resumen = sistema.autoverificar(mutacion)
    assert not resumen.ok
