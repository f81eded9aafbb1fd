"""
Generador de reportes.
Convierte las ejecuciones de los resolutores en tablas text/csv/json deterministas.
"""

import json
from typing import Iterable, List, Literal, Tuple, Union

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field
from loguru import logger

from services.oracle_service import Classification
from utils.exactnum import GaussRat, Rat, Surd2

MetodoReporte = Literal["baseline", "quantum", "gauss", "gauss-family", "surd"]


class RunReport(BaseModel):
    """Una ejecución de un método sobre un oráculo."""

    model_config = ConfigDict(frozen=True)

    oracle: str = Field(pattern=r"^[01]{2}$")
    method: MetodoReporte
    classification: Classification
    queries: int = Field(ge=0)
    witness: str


def formatear_tupla(valores: Iterable) -> str:
    """``(0,1,0,0)``: testigo de la referencia clásica y de la distribución cuántica."""
    return "(" + ",".join(str(v) for v in valores) + ")"


def parsear_testigo(reporte: RunReport) -> Union[Tuple[Rat, ...], GaussRat, Surd2]:
    """Recupera el valor exacto de un testigo a partir de su texto."""
    if reporte.method in ("baseline", "quantum"):
        interior = reporte.witness.strip()[1:-1]
        return tuple(Rat.parse(parte) for parte in interior.split(","))
    if reporte.method == "surd":
        return Surd2.parse(reporte.witness)
    return GaussRat.parse(reporte.witness)


class ReportGenerator:
    """
    Generador de la tabla comparativa.

    Formatos:
    - text: tabla alineada de pandas
    - csv: cabecera ``oracle,method,classification,queries,witness``
    - json: arreglo de objetos RunReport
    La salida es idéntica byte a byte para la misma entrada.
    """

    COLUMNAS = ["oracle", "method", "classification", "queries", "witness"]

    def __init__(self):
        """Inicializa el generador de reportes."""
        logger.debug("📄 Generador de reportes inicializado")

    def renderizar(self, reportes: List[RunReport], formato: str = "text") -> str:
        """
        Renderiza una lista de reportes.

        Args:
            reportes: Ejecuciones en el orden en que deben aparecer
            formato: text, csv o json

        Returns:
            Texto terminado en salto de línea
        """
        if formato == "json":
            return self._generar_json(reportes)
        if formato == "csv":
            return self._generar_dataframe(reportes).to_csv(index=False, lineterminator="\n")
        if formato == "text":
            return self._generar_texto(reportes)
        raise ValueError(f"Formato desconocido: {formato}")

    def _generar_dataframe(self, reportes: List[RunReport]) -> pd.DataFrame:
        filas = [reporte.model_dump(mode="json") for reporte in reportes]
        return pd.DataFrame(filas, columns=self.COLUMNAS).astype({"oracle": str, "witness": str})

    def _generar_json(self, reportes: List[RunReport]) -> str:
        filas = [reporte.model_dump(mode="json") for reporte in reportes]
        return json.dumps(filas, indent=2, ensure_ascii=False) + "\n"

    def _generar_texto(self, reportes: List[RunReport]) -> str:
        if not reportes:
            return "(sin ejecuciones)\n"
        tabla = self._generar_dataframe(reportes)
        return tabla.to_string(index=False) + "\n"

    def renderizar_traza(self, oracle: str, traza) -> str:
        """Evolución paso a paso del algoritmo cuántico para un oráculo."""
        lineas = [
            f"oracle {oracle}",
            f"  V       = {traza.v}",
            f"  HV      = {traza.hv}",
            f"  U_fHV   = {traza.ufhv}",
            f"  HU_fHV  = {traza.hufhv}",
            f"  p1..p4  = {traza.distribution}",
            f"  result  = {traza.classification.value}",
        ]
        return "\n".join(lineas) + "\n"

    def renderizar_muestreo(self, oracle: str, semilla: int, disparos: int, conteos: dict) -> str:
        detalle = " ".join(f"out{k}={n}" for k, n in sorted(conteos.items()))
        return f"sample oracle={oracle} seed={semilla} shots={disparos}: {detalle}\n"
