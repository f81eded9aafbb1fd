"""
Sistema Deutsch - Punto de entrada principal
Compara la solución cuántica del problema de Deutsch con sus dos soluciones
clásicas de-cuantizadas bajo un contrato de una sola consulta al oráculo.
"""

import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

# Agregar el directorio raíz al path para imports
sys.path.append(str(Path(__file__).parent))

from config.settings import settings
from agents.dequant_solver import (
    FamilySign,
    solve_gauss_family_with_witness,
    solve_gauss_with_witness,
    solve_surd_with_witness,
)
from agents.quantum_solver import run_deutsch, trace_deutsch
from services.oracle_service import (
    BitFn,
    Classification,
    OracleHandle,
    classify_baseline_with_witness,
    query_count,
)
from services.selftest_service import ResumenVerificacion, VerificadorInvariantes
from utils.exactnum import ONE, Rat
from utils.report_generator import ReportGenerator, RunReport, formatear_tupla
from utils.validators import DataValidator

# Configurar logging
from loguru import logger

# Configurar logger: stdout queda reservado para los reportes
logger.remove()  # Remover handler por defecto
logger.add(
    sys.stderr,
    level=settings.LOG_LEVEL.upper(),
    format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>",
    colorize=True
)
if settings.LOG_TO_FILE:
    settings.create_directories()
    logger.add(
        Path(settings.LOGS_DIR) / "deutsch_{time:YYYY-MM-DD}.log",
        level=settings.LOG_LEVEL.upper(),
        format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}",
        rotation="1 day",
        retention="30 days",
        compression="zip"
    )

Resolutor = Callable[[OracleHandle, Rat, FamilySign], Tuple[Classification, str]]


class SistemaDeutsch:
    """
    Sistema principal Deutsch.

    Coordina los cinco métodos (referencia clásica, cuántico, Q[i], familia
    en Q[i] y Z[√2]) sobre los cuatro oráculos, contando las consultas que
    consume cada ejecución.
    """

    def __init__(self):
        """Inicializa el sistema Deutsch."""
        logger.info("🚀 Inicializando Sistema Deutsch")

        # Validar configuración
        if not settings.validate_config():
            logger.error("❌ Configuración inválida. Revisa las variables de entorno.")
            raise RuntimeError("Configuración inválida")

        self.validator = DataValidator()
        self.report_generator = ReportGenerator()

        # Métodos en orden de declaración
        self.resolutores: Dict[str, Resolutor] = {
            "baseline": self._ejecutar_baseline,
            "quantum": self._ejecutar_cuantico,
            "gauss": self._ejecutar_gauss,
            "gauss-family": self._ejecutar_familia,
            "surd": self._ejecutar_surd,
        }

        logger.info("✅ Sistema Deutsch inicializado correctamente")

    # Resolutores: cada uno recibe sólo el handle
    @staticmethod
    def _ejecutar_baseline(h: OracleHandle, a: Rat, sign: FamilySign) -> Tuple[Classification, str]:
        clasificacion, bits = classify_baseline_with_witness(h)
        return clasificacion, formatear_tupla(bits)

    @staticmethod
    def _ejecutar_cuantico(h: OracleHandle, a: Rat, sign: FamilySign) -> Tuple[Classification, str]:
        distribucion, clasificacion = run_deutsch(h)
        return clasificacion, str(distribucion)

    @staticmethod
    def _ejecutar_gauss(h: OracleHandle, a: Rat, sign: FamilySign) -> Tuple[Classification, str]:
        clasificacion, producto = solve_gauss_with_witness(h)
        return clasificacion, str(producto)

    @staticmethod
    def _ejecutar_familia(h: OracleHandle, a: Rat, sign: FamilySign) -> Tuple[Classification, str]:
        clasificacion, producto = solve_gauss_family_with_witness(h, a, sign)
        return clasificacion, str(producto)

    @staticmethod
    def _ejecutar_surd(h: OracleHandle, a: Rat, sign: FamilySign) -> Tuple[Classification, str]:
        clasificacion, producto = solve_surd_with_witness(h)
        return clasificacion, str(producto)

    def ejecutar_metodo(
        self,
        fn: BitFn,
        metodo: str,
        a: Rat = ONE,
        sign: FamilySign = FamilySign.MINUS
    ) -> RunReport:
        """
        Ejecuta un método sobre un oráculo nuevo y registra las consultas consumidas.

        Args:
            fn: Función oculta tras el oráculo
            metodo: Nombre de método de reporte (baseline, quantum, gauss, gauss-family, surd)
            a: Parámetro racional de la familia
            sign: Variante de la familia

        Returns:
            RunReport de la ejecución
        """
        handle = OracleHandle(fn)
        consultas_antes = query_count(handle)

        clasificacion, testigo = self.resolutores[metodo](handle, a, sign)

        reporte = RunReport(
            oracle=fn.etiqueta,
            method=metodo,
            classification=clasificacion,
            queries=query_count(handle) - consultas_antes,
            witness=testigo
        )
        logger.info(f"📊 {reporte.oracle} {reporte.method}: {reporte.classification.value} ({reporte.queries} consultas)")
        return reporte

    def ejecutar(
        self,
        oracle_spec: str,
        method_spec: str,
        a: str = "1",
        sign: str = "minus"
    ) -> Dict:
        """
        Valida la entrada y ejecuta cada par (oráculo, método).

        Los oráculos van en orden ascendente y los métodos en orden de declaración.

        Returns:
            Dict con los reportes o con el error de validación
        """
        oraculos = self.validator.validar_oraculo(oracle_spec)
        if not oraculos["valido"]:
            return {"error": oraculos["error"], "codigo_error": oraculos["codigo_error"]}

        metodos = self.validator.validar_metodo(method_spec)
        if not metodos["valido"]:
            return {"error": metodos["error"], "codigo_error": metodos["codigo_error"]}

        # a y sign sólo intervienen en la familia
        valor_a, signo = ONE, FamilySign.MINUS
        if "gauss-family" in metodos["metodos"]:
            parametro = self.validator.validar_parametro_a(a)
            if not parametro["valido"]:
                return {"error": parametro["error"], "codigo_error": parametro["codigo_error"]}

            if not self.validator.validar_signo(sign):
                return {"error": f"Signo inválido {sign!r}: usa minus o plus", "codigo_error": "INVALID_SIGN"}

            valor_a = parametro["a"]
            signo = FamilySign(self.validator.sanitizar_texto(sign).lower())

        reportes = [
            self.ejecutar_metodo(fn, metodo, valor_a, signo)
            for fn in oraculos["oraculos"]
            for metodo in metodos["metodos"]
        ]
        return {"success": True, "reportes": reportes}

    def tabla_completa(self) -> List[RunReport]:
        """Rejilla 4 oráculos x 5 métodos con a = 1 y variante minus."""
        return self.ejecutar("all", "all")["reportes"]

    def trazar(self, oracle_spec: str) -> Dict:
        """Evolución paso a paso del algoritmo cuántico para los oráculos pedidos."""
        oraculos = self.validator.validar_oraculo(oracle_spec)
        if not oraculos["valido"]:
            return {"error": oraculos["error"], "codigo_error": oraculos["codigo_error"]}

        trazas = []
        for fn in oraculos["oraculos"]:
            handle = OracleHandle(fn)
            trazas.append((fn.etiqueta, trace_deutsch(handle), query_count(handle)))
        return {"success": True, "trazas": trazas}

    def muestrear(self, fn: BitFn, semilla: int, disparos: int) -> Dict[int, int]:
        """Muestreo sembrado de la medición cuántica; sólo demostrativo."""
        distribucion, _ = run_deutsch(OracleHandle(fn))
        return distribucion.sample(semilla, disparos)

    def autoverificar(self, mutacion: Optional[str] = None) -> ResumenVerificacion:
        """Ejecuta la batería completa de invariantes."""
        verificador = VerificadorInvariantes(
            sistema=self,
            semilla=settings.SELFTEST_SEED,
            muestras=settings.PROPERTY_SAMPLES,
            mutacion=mutacion
        )
        return verificador.ejecutar()

    def obtener_estadisticas_sistema(self) -> dict:
        """
        Obtiene estadísticas del sistema.

        Returns:
            Dict con versión, configuración y catálogo de métodos
        """
        return {
            "version": settings.VERSION,
            "proyecto": settings.PROJECT_NAME,
            "configuracion": {
                "debug": settings.DEBUG,
                "log_level": settings.LOG_LEVEL,
                "int_bits": settings.INT_BITS,
                "selftest_seed": settings.SELFTEST_SEED,
                "property_samples": settings.PROPERTY_SAMPLES,
                "family_samples": settings.FAMILY_SAMPLES
            },
            "metodos": list(self.resolutores),
            "oraculos": list(self.validator.oraculos_validos),
            "formatos": list(self.validator.FORMATOS)
        }


if __name__ == "__main__":
    from cli import cli

    cli()
