from rich.console import Console

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_DEFAULT_HANDLERS = [
    "console",
]

# Логи в stderr: stdout занят документами (DOT, JSON, отчёты)
# https://docs.python.org/3/howto/logging-cookbook.html
STDERR_CONSOLE = Console(stderr=True)

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {"format": LOG_FORMAT},
        "rich": {"format": "%(message)s", "datefmt": "[%X]"},
    },
    "handlers": {
        "console": {
            "level": "DEBUG",
            "class": "rich.logging.RichHandler",
            "formatter": "rich",
            "show_path": False,
            "console": "ext://core.logger.STDERR_CONSOLE",
        },
    },
    "loggers": {
        "omgraph": {
            "handlers": LOG_DEFAULT_HANDLERS,
            "level": "WARNING",
            "propagate": False,
        },
    },
    "root": {
        "level": "WARNING",
        "formatter": "verbose",
        "handlers": LOG_DEFAULT_HANDLERS,
    },
}
