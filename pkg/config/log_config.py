import logging
import sys

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


class LogConfig:
    @staticmethod
    def configure(level='WARNING'):
        """Install a single stderr handler on the package loggers"""
        root = logging.getLogger('src')
        for handler in list(root.handlers):
            root.removeHandler(handler)

        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
        root.setLevel(LogConfig.resolve_level(level))
        root.propagate = False
        return root

    @staticmethod
    def resolve_level(level):
        """Map a level name (or number) to a logging level"""
        if isinstance(level, int):
            return level
        resolved = logging.getLevelName(str(level).upper())
        if not isinstance(resolved, int):
            raise ValueError(f"Unknown log level: {level}")
        return resolved
