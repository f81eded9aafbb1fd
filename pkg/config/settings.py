"""
Configuración centralizada del sistema Deutsch.
Maneja variables de entorno y configuraciones globales.
"""

import os
from pathlib import Path
from dotenv import load_dotenv
from typing import List

# Cargar variables de entorno
load_dotenv()

class Settings:
    """Configuraciones del sistema Deutsch."""

    # Información del proyecto
    PROJECT_NAME: str = "DeutschExacto"
    VERSION: str = "1.0.0"
    DESCRIPTION: str = "Solución cuántica y de-cuantizada del problema de Deutsch con aritmética exacta"

    # Configuración de directorios
    LOGS_DIR: str = os.getenv("LOGS_DIR", "./data/logs")

    # Configuración de logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")
    LOG_TO_FILE: bool = os.getenv("LOG_TO_FILE", "False").lower() == "true"
    DEBUG: bool = os.getenv("DEBUG", "False").lower() == "true"

    # Aritmética exacta: ancho del rango entero verificado
    INT_BITS: int = int(os.getenv("INT_BITS", "64"))

    # Autoverificación (selftest)
    SELFTEST_SEED: int = int(os.getenv("SELFTEST_SEED", "1998"))
    PROPERTY_SAMPLES: int = int(os.getenv("PROPERTY_SAMPLES", "200"))
    FAMILY_SAMPLES: int = int(os.getenv("FAMILY_SAMPLES", "100"))
    FAMILY_RANGE: int = int(os.getenv("FAMILY_RANGE", "50"))

    # Configuración de la API
    API_HOST: str = os.getenv("API_HOST", "0.0.0.0")
    API_PORT: int = int(os.getenv("API_PORT", "8000"))

    LOG_LEVELS: List[str] = ["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"]

    @classmethod
    def validate_config(cls) -> bool:
        """Valida que las configuraciones críticas sean coherentes."""
        problemas = []

        if cls.INT_BITS < 8:
            problemas.append(f"INT_BITS demasiado pequeño: {cls.INT_BITS}")

        for nombre in ("PROPERTY_SAMPLES", "FAMILY_SAMPLES", "FAMILY_RANGE"):
            if getattr(cls, nombre) <= 0:
                problemas.append(f"{nombre} debe ser positivo")

        if cls.LOG_LEVEL.upper() not in cls.LOG_LEVELS:
            problemas.append(f"LOG_LEVEL desconocido: {cls.LOG_LEVEL}")

        if problemas:
            for problema in problemas:
                print(f"❌ {problema}")
            return False

        return True

    @classmethod
    def create_directories(cls) -> None:
        """Crea el directorio de logs si el log a archivo está activo."""
        if cls.LOG_TO_FILE:
            Path(cls.LOGS_DIR).mkdir(parents=True, exist_ok=True)

# Instancia global de configuración
settings = Settings()

# Validar configuración al importar
if __name__ == "__main__":
    settings.validate_config()
    settings.create_directories()
