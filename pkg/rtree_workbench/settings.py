"""
Django settings for rtree_workbench project.

Banco de trabajo simbólico para el árbol real universal T_kappa y su
filtración por complejidad. No hay superficie web: la aplicación se usa
mediante comandos de gestión.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('SECRET_KEY', 'django-insecure-rtree-workbench-local-only')

DEBUG = os.environ.get('DEBUG', 'False').lower() == 'true'

# Application definition

INSTALLED_APPS = [
    'realtrees',  # Árboles reales y filtración T^[alpha]
]

# Sin base de datos: todo el cálculo es en memoria
DATABASES = {}


# Configuración del banco de trabajo

# Tope de eventos del procedimiento de decisión del ínfimo
RTREE_UNFOLD_CAP = int(os.environ.get('RTREE_UNFOLD_CAP', '100000'))

# Alfabeto para ficheros sin cabecera (alphabet ...)
RTREE_DEFAULT_ALPHABET = os.environ.get('RTREE_DEFAULT_ALPHABET', 'finite 3')

# Semilla de las baterías de propiedades
RTREE_DEFAULT_SEED = int(os.environ.get('RTREE_SEED', '1'))

RTREE_SUITE_CASES = {
    'metric': 10000,
    'fourpoint': 10000,
    'glb': 10000,
    'isometry': 10000,
    'rank-oracle': 1000,
    'limit': 1,
    'escape': 1,
    'directions': 100,
}

RTREE_ESCAPE = {
    'RADIUS': '1',
    'STEPS': 10,
}

RTREE_LOG_LEVEL = os.environ.get('RTREE_LOG_LEVEL', 'WARNING')


# Logging: siempre a stderr para que la salida de los comandos sea exacta
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose' if DEBUG else 'simple',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'realtrees': {
            'handlers': ['console'],
            'level': RTREE_LOG_LEVEL,
            'propagate': False,
        },
    },
}
