"""
API REST para el Sistema Deutsch.
Expone por HTTP las mismas ejecuciones que la CLI.
"""

from contextlib import asynccontextmanager
from typing import Optional

import uvicorn
from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse
from loguru import logger

from main import SistemaDeutsch
from config.settings import settings
from services.selftest_service import MUTACIONES

# Instancia global del sistema
sistema_global: Optional[SistemaDeutsch] = None


def obtener_sistema() -> SistemaDeutsch:
    """Devuelve el sistema global, creándolo en el primer uso."""
    global sistema_global
    if sistema_global is None:
        try:
            sistema_global = SistemaDeutsch()
        except RuntimeError as e:
            raise HTTPException(status_code=503, detail=f"Sistema no inicializado: {e}")
    return sistema_global


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Inicializa el sistema al arrancar la API."""
    obtener_sistema()
    yield


# Crear aplicación FastAPI
app = FastAPI(
    title="Deutsch API",
    description=settings.DESCRIPTION,
    version=settings.VERSION,
    lifespan=lifespan
)

# Configurar CORS
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.get("/")
async def root():
    """Endpoint raíz de bienvenida."""
    return {
        "mensaje": "⚛️ Bienvenido a Deutsch API",
        "version": settings.VERSION,
        "descripcion": settings.DESCRIPTION,
        "documentacion": "/docs"
    }


@app.get("/health")
async def health_check():
    """Endpoint de verificación de salud del sistema."""
    try:
        stats = obtener_sistema().obtener_estadisticas_sistema()
        return {
            "status": "healthy",
            "sistema_iniciado": sistema_global is not None,
            "estadisticas": stats
        }
    except HTTPException:
        raise
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Error en health check: {str(e)}")


@app.get("/run")
async def ejecutar(
    oracle: str = Query(..., description="00, 01, 10, 11 o all"),
    method: str = Query(..., description="baseline, quantum, gauss, family, surd o all"),
    a: str = Query("1", description="Racional distinto de cero para family"),
    sign: str = Query("minus", description="minus o plus")
):
    """
    Ejecuta los métodos pedidos sobre los oráculos pedidos.

    Returns:
        Reportes en el mismo orden que la CLI
    """
    sistema = obtener_sistema()
    try:
        resultado = sistema.ejecutar(oracle, method, a, sign)
    except OverflowError as e:
        raise HTTPException(status_code=400, detail=f"Desbordamiento aritmético: {str(e)}")

    if "error" in resultado:
        raise HTTPException(status_code=400, detail=resultado["error"])

    try:
        return {
            "success": True,
            "total": len(resultado["reportes"]),
            "reportes": [reporte.model_dump(mode="json") for reporte in resultado["reportes"]]
        }
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Error serializando reportes: {str(e)}")


@app.get("/tabla")
async def obtener_tabla(formato: str = Query("json", alias="format")):
    """
    Tabla completa 4 oráculos x 5 métodos.

    Con ``format=json`` devuelve los reportes como objetos; con ``text`` o
    ``csv`` devuelve el mismo texto que ``cli.py table``.
    """
    sistema = obtener_sistema()
    if not sistema.validator.validar_formato(formato):
        raise HTTPException(status_code=400, detail=f"Formato desconocido: {formato}")

    reportes = sistema.tabla_completa()
    if formato == "json":
        return [reporte.model_dump(mode="json") for reporte in reportes]
    return PlainTextResponse(sistema.report_generator.renderizar(reportes, formato))


@app.get("/trace/{oracle}")
async def obtener_traza(oracle: str):
    """Evolución paso a paso del algoritmo cuántico."""
    resultado = obtener_sistema().trazar(oracle)
    if "error" in resultado:
        raise HTTPException(status_code=400, detail=resultado["error"])

    return {
        "trazas": [
            {
                "oracle": etiqueta,
                "v": str(traza.v),
                "hv": str(traza.hv),
                "ufhv": str(traza.ufhv),
                "hufhv": str(traza.hufhv),
                "distribution": str(traza.distribution),
                "classification": traza.classification.value,
                "queries": consultas
            }
            for etiqueta, traza, consultas in resultado["trazas"]
        ]
    }


@app.get("/selftest")
async def autoverificar(mutate: Optional[str] = None):
    """Ejecuta la batería de invariantes y devuelve el resumen."""
    if mutate is not None and mutate not in MUTACIONES:
        raise HTTPException(status_code=400, detail=f"Mutación desconocida: {mutate}")

    try:
        resumen = obtener_sistema().autoverificar(mutate)
    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"❌ Error en autoverificación: {e}")
        raise HTTPException(status_code=500, detail=f"Error en autoverificación: {str(e)}")

    return {
        "ok": resumen.ok,
        "total": resumen.total,
        "passed": resumen.total - len(resumen.fallidas),
        "failed": len(resumen.fallidas),
        "fallas": [
            {"modulo": r.modulo, "nombre": r.nombre, "detalle": r.detalle}
            for r in resumen.fallidas
        ]
    }


def iniciar_api_server(host: str = settings.API_HOST, port: int = settings.API_PORT):
    """
    Inicia el servidor de la API.

    Args:
        host: Host donde ejecutar el servidor
        port: Puerto donde ejecutar el servidor
    """
    logger.info(f"🚀 Iniciando Deutsch API en http://{host}:{port}")
    logger.info(f"📚 Documentación disponible en http://{host}:{port}/docs")

    uvicorn.run(
        "api:app",
        host=host,
        port=port,
        reload=settings.DEBUG,
        log_level="info"
    )


if __name__ == "__main__":
    iniciar_api_server()
