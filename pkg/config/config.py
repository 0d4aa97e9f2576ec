import os
from dotenv import load_dotenv

load_dotenv()


class Config:
    # Per-edge parallelism cap
    RICCI_THREADS = max(1, int(os.environ.get('RICCI_THREADS', os.cpu_count() or 1)))

    # Spectral solver
    JACOBI_TOL = float(os.environ.get('JACOBI_TOL', 1e-12))
    JACOBI_MAX_SWEEPS = int(os.environ.get('JACOBI_MAX_SWEEPS', 100))
    SPECTRAL_SLACK = float(os.environ.get('SPECTRAL_SLACK', 1e-9))

    # Random corpus for `verify`
    VERIFY_RANDOM_GRAPHS = int(os.environ.get('VERIFY_RANDOM_GRAPHS', 200))
    VERIFY_MAX_VERTICES = int(os.environ.get('VERIFY_MAX_VERTICES', 12))
    VERIFY_EDGE_PROBABILITY = float(os.environ.get('VERIFY_EDGE_PROBABILITY', 0.35))
    VERIFY_SEED = int(os.environ.get('VERIFY_SEED', 2024))

    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING').upper()
    TESTING = False


class DevelopmentConfig(Config):
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO').upper()


class TestingConfig(Config):
    TESTING = True
    RICCI_THREADS = 1
    VERIFY_RANDOM_GRAPHS = 20


class ProductionConfig(Config):
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING').upper()


config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': ProductionConfig
}


def get_config(config_name=None):
    """Resolve a settings class by name, falling back to RICCI_ENV"""
    config_name = config_name or os.getenv('RICCI_ENV', 'default')
    try:
        return config[config_name]
    except KeyError:
        raise ValueError(f"Unknown configuration '{config_name}'. Valid: {', '.join(sorted(config))}")
