"""Servicios del sistema Deutsch."""

from .oracle_service import Classification, OracleHandle, new_oracle, query, query_count

__all__ = ["Classification", "OracleHandle", "new_oracle", "query", "query_count"]
