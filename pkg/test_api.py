"""
Pruebas de la API REST.
"""

import sys
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

# Agregar el directorio raíz al path
sys.path.append(str(Path(__file__).parent))

from api import app


@pytest.fixture(scope="module")
def cliente():
    with TestClient(app) as c:
        yield c


def test_root(cliente):
    respuesta = cliente.get("/")
    assert respuesta.status_code == 200
    assert "version" in respuesta.json()


def test_health(cliente):
    datos = cliente.get("/health").json()
    assert datos["status"] == "healthy"
    assert datos["estadisticas"]["metodos"] == ["baseline", "quantum", "gauss", "gauss-family", "surd"]
    assert datos["estadisticas"]["oraculos"] == ["00", "01", "10", "11"]


def test_run(cliente):
    respuesta = cliente.get("/run", params={"oracle": "11", "method": "gauss"})
    assert respuesta.status_code == 200
    reporte = respuesta.json()["reportes"][0]
    assert reporte["witness"] == "-2i"
    assert reporte["classification"] == "Constant"
    assert reporte["queries"] == 1


def test_run_entrada_invalida(cliente):
    respuesta = cliente.get("/run", params={"oracle": "01", "method": "family", "a": "0"})
    assert respuesta.status_code == 400
    assert "distinto de cero" in respuesta.json()["detail"]


def test_run_desbordamiento(cliente):
    respuesta = cliente.get("/run", params={"oracle": "00", "method": "family", "a": str(2**62)})
    assert respuesta.status_code == 400
    assert "Desbordamiento" in respuesta.json()["detail"]


def test_tabla_json(cliente):
    filas = cliente.get("/tabla").json()
    assert len(filas) == 20


def test_tabla_csv(cliente):
    respuesta = cliente.get("/tabla", params={"format": "csv"})
    assert respuesta.status_code == 200
    assert respuesta.text.splitlines()[0] == "oracle,method,classification,queries,witness"


def test_tabla_formato_desconocido(cliente):
    assert cliente.get("/tabla", params={"format": "yaml"}).status_code == 400


def test_traza(cliente):
    traza = cliente.get("/trace/10").json()["trazas"][0]
    assert traza["hufhv"] == "(0,0,0,-1)"
    assert traza["distribution"] == "(0,0,0,1)"
    assert traza["classification"] == "Balanced"
    assert traza["queries"] == 1


def test_traza_oraculo_invalido(cliente):
    assert cliente.get("/trace/22").status_code == 400


def test_selftest(cliente):
    datos = cliente.get("/selftest").json()
    assert datos["ok"] is True
    assert datos["failed"] == 0


def test_selftest_mutacion_desconocida(cliente):
    assert cliente.get("/selftest", params={"mutate": "oracle"}).status_code == 400
