"""Configuración del sistema Deutsch."""

from .settings import settings

__all__ = ["settings"]
