from .scriptutils import add_logging_file_handler
