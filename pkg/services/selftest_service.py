"""
Servicio de autoverificación.
Ejecuta la batería de invariantes de todos los módulos y resume el resultado.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np
from loguru import logger

from agents.dequant_solver import (
    CfBox,
    FamilySign,
    MULT_GAUSS,
    PROBE_GAUSS,
    PROBE_SURD,
    MULT_SURD,
    SURD_BOUND,
    cf_eval,
    cf_eval_surd,
    closed_form_map,
    closed_form_map_surd,
    solve_gauss_family,
    solve_gauss_with_witness,
    solve_surd_with_witness,
)
from agents.quantum_solver import (
    Mat4,
    State4,
    control_minus_state,
    hadamard4,
    is_unitary,
    kickback_basis_state,
    kickback_state,
    mat_apply,
    oracle_matrix,
    trace_deutsch,
)
from config.settings import settings
from services.oracle_service import (
    BitFn,
    Classification,
    OracleHandle,
    classify_baseline,
    query,
    query_count,
    todas_las_funciones,
)
from utils.exactnum import HALF, ONE, ZERO, GaussRat, Rat, Surd2, g_conj, g_mul, s_conj, s_mul
from utils.report_generator import formatear_tupla, parsear_testigo

MUTACIONES = ("hadamard", "decision")


@dataclass(frozen=True)
class ResultadoVerificacion:
    modulo: str
    nombre: str
    ok: bool
    detalle: str = ""


@dataclass
class ResumenVerificacion:
    resultados: List[ResultadoVerificacion] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.resultados)

    @property
    def fallidas(self) -> List[ResultadoVerificacion]:
        return [r for r in self.resultados if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.fallidas


class VerificadorInvariantes:
    """
    Batería de invariantes de exactnum, oráculo, cuántico, de-cuantizado y CLI.

    Con ``mutacion="hadamard"`` la H usada por la parte cuántica tiene la
    entrada (1,1) en 1; con ``mutacion="decision"`` la regla de Q[i] se invierte.
    En ambos casos la batería debe fallar.
    """

    def __init__(self, sistema, semilla: int, muestras: int, mutacion: Optional[str] = None):
        if mutacion is not None and mutacion not in MUTACIONES:
            raise ValueError(f"Mutación desconocida: {mutacion}")

        self.sistema = sistema
        self.muestras = muestras
        self.mutacion = mutacion
        self.rng = np.random.default_rng(semilla)
        self.resumen = ResumenVerificacion()

        self._hadamard = hadamard4()
        if mutacion == "hadamard":
            self._hadamard = self._hadamard.with_entry(0, 0, ONE)

        logger.info(f"🧪 Verificador de invariantes inicializado (mutación: {mutacion or 'ninguna'})")

    # ------------------------------------------------------------------
    # infraestructura
    # ------------------------------------------------------------------

    def _verificar(self, modulo: str, nombre: str, comprobacion: Callable[[], bool]) -> None:
        try:
            ok = bool(comprobacion())
            detalle = "" if ok else "condición falsa"
        except Exception as e:
            ok = False
            detalle = f"{type(e).__name__}: {e}"

        self.resumen.resultados.append(ResultadoVerificacion(modulo, nombre, ok, detalle))
        if not ok:
            logger.error(f"❌ [{modulo}] {nombre}: {detalle}")

    def _entero(self, rango: int = 50) -> int:
        return int(self.rng.integers(-rango, rango + 1))

    def _rat(self, rango: int = 50) -> Rat:
        return Rat(self._entero(rango), int(self.rng.integers(1, rango + 1)))

    def _gauss(self) -> GaussRat:
        return GaussRat(self._rat(), self._rat())

    def _surd(self) -> Surd2:
        return Surd2(self._entero(), self._entero())

    def _muestras(self, generador: Callable) -> List:
        return [generador() for _ in range(self.muestras)]

    def _resolver_gauss(self, h: OracleHandle) -> Tuple[Classification, GaussRat]:
        if self.mutacion != "decision":
            return solve_gauss_with_witness(h)
        producto = g_mul(MULT_GAUSS, cf_eval(CfBox(h), PROBE_GAUSS))
        return (Classification.CONSTANT if producto.is_real else Classification.BALANCED), producto

    # ------------------------------------------------------------------
    # ejecución
    # ------------------------------------------------------------------

    def ejecutar(self) -> ResumenVerificacion:
        """Ejecuta todos los grupos y devuelve el resumen."""
        self._verificar_exactnum()
        self._verificar_oraculo()
        self._verificar_cuantico()
        self._verificar_decuantizado()
        self._verificar_cli()

        logger.info(f"🧪 Autoverificación: {self.resumen.total - len(self.resumen.fallidas)}/{self.resumen.total} correctas")
        return self.resumen

    # ------------------------------------------------------------------
    # exactnum
    # ------------------------------------------------------------------

    def _verificar_exactnum(self) -> None:
        rats = self._muestras(self._rat)
        gauss = self._muestras(self._gauss)
        surds = self._muestras(self._surd)
        ternas = list(zip(rats, rats[1:] + rats[:1], rats[2:] + rats[:2]))
        ternas_g = list(zip(gauss, gauss[1:] + gauss[:1], gauss[2:] + gauss[:2]))
        ternas_s = list(zip(surds, surds[1:] + surds[:1], surds[2:] + surds[:2]))

        def canonico(r: Rat) -> bool:
            return r.den > 0 and math.gcd(abs(r.num), r.den) == 1

        self._verificar("exactnum", "forma canónica de Rat", lambda: all(
            canonico(x + y) and canonico(x * y) and canonico(-x) for x, y, _ in ternas
        ))
        self._verificar("exactnum", "forma canónica de GaussRat", lambda: all(
            canonico(z.re) and canonico(z.im) for x, y, _ in ternas_g for z in (x + y, x * y)
        ))

        for nombre, muestras in (("Rat", ternas), ("GaussRat", ternas_g), ("Surd2", ternas_s)):
            self._verificar("exactnum", f"leyes de anillo de {nombre}", lambda m=muestras: all(
                (x + y) + z == x + (y + z)
                and (x * y) * z == x * (y * z)
                and x + y == y + x
                and x * y == y * x
                and x * (y + z) == x * y + x * z
                for x, y, z in m
            ))

        self._verificar("exactnum", "conj(conj(z)) = z", lambda: all(g_conj(g_conj(z)) == z for z in gauss))
        self._verificar("exactnum", "conj(conj(s)) = s", lambda: all(s_conj(s_conj(s)) == s for s in surds))
        self._verificar("exactnum", "z·conj(z) real y no negativo", lambda: all(
            g_mul(z, g_conj(z)).is_real and g_mul(z, g_conj(z)).re >= ZERO for z in gauss
        ))
        self._verificar("exactnum", "s·conj(s) racional", lambda: all(
            s_mul(s, s_conj(s)).is_rational for s in surds
        ))
        self._verificar("exactnum", "ida y vuelta por texto", lambda: all(
            Rat.parse(str(r)) == r for r in rats
        ) and all(
            GaussRat.parse(str(z)) == z for z in gauss
        ) and all(
            Surd2.parse(str(s)) == s and Surd2.parse(s.surd_first_str()) == s for s in surds
        ))

    # ------------------------------------------------------------------
    # oráculo
    # ------------------------------------------------------------------

    def _verificar_oraculo(self) -> None:
        def referencia_correcta() -> bool:
            for fn in todas_las_funciones():
                h = OracleHandle(fn)
                if classify_baseline(h) != fn.kind or query_count(h) != 2:
                    return False
            return True

        self._verificar("oracle", "referencia clásica correcta con 2 consultas", referencia_correcta)

        def estrategia_constante_falla() -> bool:
            for respuesta in Classification:
                if all(fn.kind == respuesta for fn in todas_las_funciones()):
                    return False
            return True

        self._verificar("oracle", "ninguna respuesta fija acierta sin consultar", estrategia_constante_falla)

        def contador_monotono() -> bool:
            operaciones = [
                (lambda h: query(h, 0), 1),
                (lambda h: query(h, 1), 1),
                (classify_baseline, 2),
                (lambda h: trace_deutsch(h), 1),
                (lambda h: solve_gauss_with_witness(h), 1),
                (lambda h: solve_surd_with_witness(h), 1),
                (lambda h: oracle_matrix(h), 0),
            ]
            for fn in todas_las_funciones():
                h = OracleHandle(fn)
                for indice in self.rng.integers(0, len(operaciones), size=20):
                    operacion, coste = operaciones[int(indice)]
                    antes = query_count(h)
                    operacion(h)
                    if query_count(h) != antes + coste:
                        return False
            return True

        self._verificar("oracle", "contador monótono con coste exacto", contador_monotono)

    # ------------------------------------------------------------------
    # cuántico
    # ------------------------------------------------------------------

    def _verificar_cuantico(self) -> None:
        H = self._hadamard
        funciones = list(todas_las_funciones())

        self._verificar("quantum", "U_f unitaria para las cuatro f", lambda: all(
            is_unitary(oracle_matrix(OracleHandle(fn))) for fn in funciones
        ))
        self._verificar("quantum", "H unitaria", lambda: is_unitary(H))
        self._verificar("quantum", "H·H = I", lambda: H @ H == Mat4.identity())

        def estados_intermedios() -> bool:
            for fn in funciones:
                traza = trace_deutsch(OracleHandle(fn), H)
                f0, f1 = fn.f0, fn.f1
                esperado_ufhv = State4([HALF - f0, -HALF + f0, HALF - f1, -HALF + f1])
                esperado_final = State4([0, 1 - f0 - f1, 0, f1 - f0])
                if traza.hv != State4([HALF, -HALF, HALF, -HALF]):
                    return False
                if traza.ufhv != esperado_ufhv or traza.hufhv != esperado_final:
                    return False
            return True

        self._verificar("quantum", "HV, U_fHV y HU_fHV exactos", estados_intermedios)

        def equivalencia_kickback() -> bool:
            for fn in funciones:
                hv = mat_apply(H, State4.basis(1))
                if kickback_state(OracleHandle(fn)) != mat_apply(oracle_matrix(OracleHandle(fn)), hv):
                    return False
            return True

        self._verificar("quantum", "forma cerrada de la retrofase = U_f·H·V", equivalencia_kickback)

        def retrofase_por_base() -> bool:
            for fn in funciones:
                for x in (0, 1):
                    entrada = control_minus_state(x)
                    esperado = -entrada if fn(x) else entrada
                    if kickback_basis_state(OracleHandle(fn), x) != esperado:
                        return False
            return True

        self._verificar("quantum", "U_f|x>(|0>-|1>) = (-1)^f(x)|x>(|0>-|1>)", retrofase_por_base)

        def dicotomia_y_normalizacion() -> bool:
            for fn in funciones:
                traza = trace_deutsch(OracleHandle(fn), H)
                d = traza.distribution
                if d.p1 != ZERO or d.p3 != ZERO or d.p2 + d.p4 != ONE or d.p2 * d.p4 != ZERO:
                    return False
                for estado in (traza.v, traza.hv, traza.ufhv, traza.hufhv):
                    if estado.norm_squared() != ONE or not estado.is_real:
                        return False
            return True

        self._verificar("quantum", "p1 = p3 = 0, p2·p4 = 0, norma y realidad conservadas", dicotomia_y_normalizacion)

        def acuerdo_cuantico() -> bool:
            for fn in funciones:
                h = OracleHandle(fn)
                if trace_deutsch(h, H).classification != fn.kind or query_count(h) != 1:
                    return False
            return True

        self._verificar("quantum", "clasificación correcta con 1 consulta", acuerdo_cuantico)

    # ------------------------------------------------------------------
    # de-cuantizado
    # ------------------------------------------------------------------

    def _verificar_decuantizado(self) -> None:
        funciones = list(todas_las_funciones())
        gauss = self._muestras(self._gauss)
        surds = self._muestras(self._surd)

        def formas_cerradas() -> bool:
            for fn in funciones:
                mapa = closed_form_map(fn.f0, fn.f1)
                mapa_surd = closed_form_map_surd(fn.f0, fn.f1)
                caja = CfBox(OracleHandle(fn))
                if any(cf_eval(caja, z) != mapa(z) for z in gauss):
                    return False
                if any(cf_eval_surd(caja, s) != mapa_surd(s) for s in surds):
                    return False
            return True

        self._verificar("dequant", "C_f coincide con conj/id/-id/-conj", formas_cerradas)

        def tabla_gauss() -> bool:
            productos = [self._resolver_gauss(OracleHandle(fn))[1] for fn in funciones]
            return [str(p) for p in productos] == ["2i", "-2", "2", "-2i"]

        def tabla_surd() -> bool:
            productos = [solve_surd_with_witness(OracleHandle(fn))[1] for fn in funciones]
            return productos == [Surd2(-3, 2), Surd2(1), Surd2(-1), Surd2(3, -2)]

        self._verificar("dequant", "productos en Q[i]: 2i, -2, 2, -2i", tabla_gauss)
        self._verificar("dequant", "productos en Z[√2]: 2√2-3, 1, -1, 3-2√2", tabla_surd)

        def acuerdo_y_coste() -> bool:
            for fn in funciones:
                for resolutor in (self._resolver_gauss, solve_surd_with_witness):
                    h = OracleHandle(fn)
                    if resolutor(h)[0] != fn.kind or query_count(h) != 1:
                        return False
            return True

        self._verificar("dequant", "Q[i] y Z[√2] aciertan con 1 consulta", acuerdo_y_coste)

        def familia() -> bool:
            rango = settings.FAMILY_RANGE
            valores_a = []
            while len(valores_a) < settings.FAMILY_SAMPLES:
                a = self._rat(rango)
                if a.num != 0:
                    valores_a.append(a)
            for a in valores_a:
                for signo in FamilySign:
                    for fn in funciones:
                        h = OracleHandle(fn)
                        if solve_gauss_family(h, a, signo) != classify_baseline(OracleHandle(fn)):
                            return False
                        if query_count(h) != 1:
                            return False
            return True

        self._verificar("dequant", "familia a(i∓1) acierta para todo a distinto de cero", familia)

        def cota_surd() -> bool:
            for fn in funciones:
                imagen = cf_eval_surd(CfBox(OracleHandle(fn)), PROBE_SURD)
                producto = s_mul(MULT_SURD, imagen)
                for valor in (PROBE_SURD, MULT_SURD, imagen, producto):
                    if abs(valor.a) > SURD_BOUND or abs(valor.b) > SURD_BOUND:
                        return False
            return True

        self._verificar("dequant", "valores de Z[√2] dentro de |a|, |b| <= 3", cota_surd)

        def linealidad() -> bool:
            for fn in funciones:
                caja = CfBox(OracleHandle(fn))
                for z, w, r in zip(gauss, gauss[1:], self._muestras(self._rat)):
                    if cf_eval(caja, z + w) != cf_eval(caja, z) + cf_eval(caja, w):
                        return False
                    if cf_eval(caja, GaussRat(r) * z) != GaussRat(r) * cf_eval(caja, z):
                        return False
                for s, t, k in zip(surds, surds[1:], (self._entero() for _ in surds)):
                    if cf_eval_surd(caja, s + t) != cf_eval_surd(caja, s) + cf_eval_surd(caja, t):
                        return False
                    if cf_eval_surd(caja, Surd2(k) * s) != Surd2(k) * cf_eval_surd(caja, s):
                        return False
            return True

        self._verificar("dequant", "linealidad del embebido", linealidad)

    # ------------------------------------------------------------------
    # CLI / reportes
    # ------------------------------------------------------------------

    def _verificar_cli(self) -> None:
        generador = self.sistema.report_generator

        def determinismo() -> bool:
            for formato in ("text", "csv", "json"):
                primera = generador.renderizar(self.sistema.tabla_completa(), formato)
                segunda = generador.renderizar(self.sistema.tabla_completa(), formato)
                if primera != segunda:
                    return False
            return True

        self._verificar("cli", "tabla idéntica byte a byte", determinismo)

        def testigos_ida_y_vuelta() -> bool:
            for reporte in self.sistema.tabla_completa():
                valor = parsear_testigo(reporte)
                texto = formatear_tupla(valor) if isinstance(valor, tuple) else str(valor)
                if texto != reporte.witness:
                    return False
            return True

        self._verificar("cli", "los testigos se leen de vuelta", testigos_ida_y_vuelta)

        def equivalencia_de_metodos() -> bool:
            costes = {"baseline": 2, "quantum": 1, "gauss": 1, "gauss-family": 1, "surd": 1}
            for reporte in self.sistema.tabla_completa():
                fn = BitFn(int(reporte.oracle[0]), int(reporte.oracle[1]))
                if reporte.classification != fn.kind or reporte.queries != costes[reporte.method]:
                    return False
            return True

        self._verificar("cli", "los cinco métodos coinciden; consultas 2 frente a 1", equivalencia_de_metodos)
