"""
Interfaz de línea de comandos del sistema Deutsch.

Uso:
    python cli.py run --oracle 01 --method gauss
    python cli.py run --oracle all --method quantum --sample 7 1000
    python cli.py table --format csv
    python cli.py trace --oracle 10
    python cli.py selftest
    python cli.py selftest --mutate hadamard

Códigos de salida: 0 éxito, 1 fallo de verificación o error interno,
2 error de uso (oráculo, método, a o formato inválidos).
"""

import sys
from typing import Optional, Tuple

import click
from loguru import logger

from config.settings import settings
from main import SistemaDeutsch
from services.oracle_service import BitFn
from services.selftest_service import MUTACIONES
from utils.validators import DataValidator


def _crear_sistema() -> SistemaDeutsch:
    try:
        return SistemaDeutsch()
    except RuntimeError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(1)


def _exigir_exito(resultado: dict) -> dict:
    if "error" in resultado:
        raise click.UsageError(resultado["error"])
    return resultado


@click.group()
@click.version_option(version=settings.VERSION, prog_name="deutsch")
def cli():
    """
    Problema de Deutsch: solución cuántica frente a las de-cuantizadas en Q[i] y Z[√2].

    Ejemplos:

        python cli.py run --oracle 01 --method gauss

        python cli.py table --format json

        python cli.py selftest
    """
    pass


@cli.command()
@click.option("--oracle", "oracle_spec", required=True, help="00, 01, 10, 11 o all")
@click.option("--method", "method_spec", required=True, help="baseline, quantum, gauss, family, surd o all")
@click.option("--a", "a", default="1", show_default=True, help="Racional distinto de cero para family (3, -3/7)")
@click.option("--sign", default="minus", show_default=True, help="Variante de family: minus o plus")
@click.option("--format", "formato", type=click.Choice(DataValidator.FORMATOS), default="text", show_default=True)
@click.option(
    "--sample",
    nargs=2,
    type=(int, click.IntRange(min=0)),
    default=None,
    metavar="SEED SHOTS",
    help="Muestreo sembrado de la medición cuántica (sólo demostrativo)",
)
def run(oracle_spec: str, method_spec: str, a: str, sign: str, formato: str, sample: Optional[Tuple[int, int]]):
    """
    Ejecuta uno o todos los métodos sobre uno o todos los oráculos.

    Un reporte por par (oráculo, método): oráculos en orden ascendente y
    métodos en orden de declaración.
    """
    sistema = _crear_sistema()
    try:
        resultado = sistema.ejecutar(oracle_spec, method_spec, a, sign)
    except OverflowError as e:
        logger.error(f"❌ Desbordamiento ejecutando métodos: {e}")
        click.echo(f"Error: {e}", err=True)
        sys.exit(1)
    reportes = _exigir_exito(resultado)["reportes"]

    try:
        click.echo(sistema.report_generator.renderizar(reportes, formato), nl=False)
    except Exception as e:
        logger.error(f"❌ Error renderizando reportes: {e}")
        click.echo(f"Error: {e}", err=True)
        sys.exit(1)

    if sample:
        semilla, disparos = sample
        for reporte in reportes:
            if reporte.method != "quantum":
                continue
            fn = BitFn(int(reporte.oracle[0]), int(reporte.oracle[1]))
            conteos = sistema.muestrear(fn, semilla, disparos)
            click.echo(
                sistema.report_generator.renderizar_muestreo(reporte.oracle, semilla, disparos, conteos),
                nl=False
            )


@cli.command()
@click.option("--format", "formato", type=click.Choice(DataValidator.FORMATOS), default="text", show_default=True)
def table(formato: str):
    """Tabla completa: 4 oráculos x 5 métodos, con a = 1 y variante minus."""
    sistema = _crear_sistema()
    click.echo(sistema.report_generator.renderizar(sistema.tabla_completa(), formato), nl=False)


@cli.command()
@click.option("--oracle", "oracle_spec", default="all", show_default=True, help="00, 01, 10, 11 o all")
def trace(oracle_spec: str):
    """Evolución V, HV, U_fHV, HU_fHV y distribución final del algoritmo cuántico."""
    sistema = _crear_sistema()
    resultado = _exigir_exito(sistema.trazar(oracle_spec))

    bloques = []
    for etiqueta, traza, consultas in resultado["trazas"]:
        texto = sistema.report_generator.renderizar_traza(etiqueta, traza)
        bloques.append(texto + f"  queries = {consultas}\n")
    click.echo("\n".join(bloques), nl=False)


@cli.command()
@click.option("--mutate", "mutacion", type=click.Choice(MUTACIONES), default=None,
              help="Ejecuta la batería contra una H o una regla de decisión mutadas")
def selftest(mutacion: Optional[str]):
    """Ejecuta la batería completa de invariantes; sale con 1 si alguna falla."""
    sistema = _crear_sistema()
    resumen = sistema.autoverificar(mutacion)

    fallidas = resumen.fallidas
    click.echo(f"checks: {resumen.total} total, {resumen.total - len(fallidas)} passed, {len(fallidas)} failed")
    for resultado in fallidas:
        click.echo(f"FAIL [{resultado.modulo}] {resultado.nombre}: {resultado.detalle}")

    if fallidas:
        sys.exit(1)
    click.echo("all checks passed")


if __name__ == "__main__":
    cli()
