"""
Validadores para el sistema Deutsch.
Contiene funciones para validar los datos de entrada de la CLI y la API.
"""

import re
from typing import Dict, List, Optional

from loguru import logger

from services.oracle_service import todas_las_funciones
from utils.exactnum import ErrorFormato, Rat

class DataValidator:
    """
    Clase para validar datos de entrada en el sistema.

    Valida especificaciones de oráculo y método, el parámetro racional de la
    familia, el signo de la variante y el formato de salida.
    """

    # Nombre en la CLI -> nombre en los reportes, en orden de declaración
    METODOS: Dict[str, str] = {
        "baseline": "baseline",
        "quantum": "quantum",
        "gauss": "gauss",
        "family": "gauss-family",
        "surd": "surd",
    }
    FORMATOS: List[str] = ["text", "csv", "json"]
    SIGNOS: List[str] = ["minus", "plus"]
    TODOS = "all"

    def __init__(self):
        """Inicializa el validador."""
        self.oraculos_validos = {fn.etiqueta: fn for fn in todas_las_funciones()}

        logger.debug("✅ Validador de datos inicializado")

    def validar_oraculo(self, especificacion: str) -> Dict:
        """
        Valida una especificación de oráculo: 00, 01, 10, 11 o all.

        Args:
            especificacion: Texto recibido de la CLI o la API

        Returns:
            Dict con resultado de la validación y las funciones seleccionadas
        """
        spec = self.sanitizar_texto(especificacion).lower()

        if spec == self.TODOS:
            return {"valido": True, "oraculos": list(self.oraculos_validos.values())}

        if spec in self.oraculos_validos:
            return {"valido": True, "oraculos": [self.oraculos_validos[spec]]}

        logger.warning(f"❌ Oráculo inválido: {especificacion!r}")
        return {
            "valido": False,
            "error": f"Oráculo inválido {especificacion!r}: usa 00, 01, 10, 11 o all",
            "codigo_error": "INVALID_ORACLE"
        }

    def validar_metodo(self, especificacion: str) -> Dict:
        """
        Valida una especificación de método.

        Returns:
            Dict con resultado y los nombres de método (de reporte) seleccionados
        """
        spec = self.sanitizar_texto(especificacion).lower()

        if spec == self.TODOS:
            return {"valido": True, "metodos": list(self.METODOS.values())}

        if spec in self.METODOS:
            return {"valido": True, "metodos": [self.METODOS[spec]]}

        mensaje = f"Método inválido {especificacion!r}: usa {', '.join(self.METODOS)} o all"
        sugerencia = self.sugerir_metodo(spec)
        if sugerencia:
            mensaje += f" (¿quisiste decir {sugerencia}?)"

        logger.warning(f"❌ {mensaje}")
        return {"valido": False, "error": mensaje, "codigo_error": "INVALID_METHOD"}

    def validar_parametro_a(self, texto: str) -> Dict:
        """
        Valida el parámetro racional a de la familia: debe ser un racional distinto de cero.

        Returns:
            Dict con resultado de la validación y el Rat interpretado
        """
        try:
            a = Rat.parse(self.sanitizar_texto(texto, max_length=None))
        except (ErrorFormato, OverflowError):
            logger.warning(f"❌ Parámetro a no es un racional: {texto!r}")
            return {
                "valido": False,
                "error": f"El parámetro a debe ser un racional como 3 o -3/7, no {texto!r}",
                "codigo_error": "INVALID_RATIONAL"
            }

        if a.num == 0:
            logger.warning("❌ Parámetro a = 0 rechazado")
            return {
                "valido": False,
                "error": "El parámetro a debe ser distinto de cero (con a = 0 el producto es 0 y no decide)",
                "codigo_error": "ZERO_PARAMETER"
            }

        return {"valido": True, "a": a}

    def validar_signo(self, signo: str) -> bool:
        return self.sanitizar_texto(signo).lower() in self.SIGNOS

    def validar_formato(self, formato: str) -> bool:
        return self.sanitizar_texto(formato).lower() in self.FORMATOS

    def sanitizar_texto(self, texto: str, max_length: Optional[int] = 64) -> str:
        """
        Sanitiza texto eliminando caracteres de control y espacios.

        Args:
            texto: Texto a sanitizar
            max_length: Longitud máxima (opcional)

        Returns:
            Texto sanitizado
        """
        if not texto or not isinstance(texto, str):
            return ""

        # Eliminar caracteres de control
        texto_limpio = re.sub(r'[\x00-\x08\x0b\x0c\x0e-\x1f\x7f]', '', texto)

        # Los valores exactos no llevan espacios
        texto_limpio = re.sub(r'\s+', '', texto_limpio)

        if max_length and len(texto_limpio) > max_length:
            texto_limpio = texto_limpio[:max_length]

        return texto_limpio

    def sugerir_metodo(self, metodo_input: str) -> Optional[str]:
        """
        Sugiere un método válido basado en el input del usuario.

        Returns:
            Método sugerido o None si no hay coincidencia
        """
        if not metodo_input:
            return None

        for metodo, nombre_reporte in self.METODOS.items():
            if metodo_input == nombre_reporte:
                return metodo

        for metodo in self.METODOS:
            if metodo_input in metodo or metodo in metodo_input:
                return metodo

        return None
