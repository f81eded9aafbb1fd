"""
Script para ejecutar la API REST del Sistema Deutsch.
"""

import os
import sys

# Agregar el directorio raíz al path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))


def main():
    """Función principal para ejecutar la API."""
    try:
        from api import iniciar_api_server
        from config.settings import settings

        print("🚀 Iniciando API REST del Sistema Deutsch...")
        print("📚 La documentación interactiva estará disponible en:")
        print(f"   - Swagger UI: http://localhost:{settings.API_PORT}/docs")
        print(f"   - ReDoc: http://localhost:{settings.API_PORT}/redoc")
        print("\n💡 Endpoints principales:")
        print("   - GET /run?oracle=01&method=gauss - Ejecutar métodos")
        print("   - GET /tabla?format=csv - Tabla comparativa completa")
        print("   - GET /trace/{oracle} - Evolución del algoritmo cuántico")
        print("   - GET /selftest - Batería de invariantes")
        print("   - GET /health - Verificar estado del sistema")
        print("\n⏹️ Presiona Ctrl+C para detener el servidor")

        iniciar_api_server(host=settings.API_HOST, port=settings.API_PORT)

    except KeyboardInterrupt:
        print("\n⏹️ Servidor detenido por el usuario")
    except Exception as e:
        print(f"❌ Error iniciando API: {e}")
        sys.exit(1)


if __name__ == "__main__":
    main()
