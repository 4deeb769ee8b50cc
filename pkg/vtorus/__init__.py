from flask import Flask
from flask_sqlalchemy import SQLAlchemy
import os
import logging
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Initialize extensions
db = SQLAlchemy()

_queue_listener = None


def configure_logging(log_level=None):
    """
    Configure asynchronous logging with QueueHandler.

    Safe to call more than once; the background listener is started only
    the first time.
    """
    global _queue_listener

    from logging.handlers import QueueHandler, QueueListener, RotatingFileHandler
    import queue
    import atexit

    log_level = (log_level or os.getenv('LOG_LEVEL', 'INFO')).upper()

    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, log_level))

    if _queue_listener is not None:
        return root_logger

    # Create queue for async logging (non-blocking)
    log_queue = queue.Queue(-1)  # Unlimited size
    queue_handler = QueueHandler(log_queue)

    # Real handlers (executed in separate thread)
    handlers = []

    # File handler with rotation (only if directory exists and LOG_TO_FILE is enabled)
    log_dir = os.getenv('LOG_DIR', 'logs')
    if os.path.isdir(log_dir) and os.getenv('LOG_TO_FILE', 'true').lower() == 'true':
        file_handler = RotatingFileHandler(
            os.path.join(log_dir, 'vtorus.log'),
            maxBytes=int(os.getenv('LOG_MAX_BYTES', 10*1024*1024)),  # 10MB default
            backupCount=int(os.getenv('LOG_BACKUP_COUNT', 5)),        # 5 files default
            encoding='utf-8'
        )
        file_handler.setLevel(logging.DEBUG)
        handlers.append(file_handler)

    # Console handler (STDERR, stdout is reserved for command output)
    console_handler = logging.StreamHandler()
    console_handler.setLevel(getattr(logging, log_level))
    handlers.append(console_handler)

    # Format: detailed for DEBUG, lightweight otherwise
    if log_level == 'DEBUG':
        log_format = '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'
    else:
        log_format = '%(levelname)s - %(name)s - %(message)s'

    formatter = logging.Formatter(log_format)
    for handler in handlers:
        handler.setFormatter(formatter)

    # Queue listener processes logs in background thread
    _queue_listener = QueueListener(
        log_queue,
        *handlers,
        respect_handler_level=True
    )
    _queue_listener.start()

    # Ensure listener stops on shutdown
    atexit.register(_queue_listener.stop)

    # Configure root logger with queue handler only
    root_logger.handlers.clear()
    root_logger.addHandler(queue_handler)

    # Suppress noisy loggers
    if log_level != 'DEBUG':
        logging.getLogger('sqlalchemy').setLevel(logging.WARNING)
        logging.getLogger('werkzeug').setLevel(logging.WARNING)

    return root_logger


def create_app(config_overrides=None):
    app = Flask(__name__)

    configure_logging()

    app.logger.handlers.clear()
    app.logger.propagate = True

    # Analysis configuration
    from vtorus.utils.settings import read_environment
    app.config.update(read_environment())

    # Verification run history
    app.config['SQLALCHEMY_DATABASE_URI'] = os.getenv('DATABASE_URL', 'sqlite:///vt_reports.db')
    app.config['SQLALCHEMY_TRACK_MODIFICATIONS'] = False

    if config_overrides:
        app.config.update(config_overrides)

    if app.config['VT_THREADS'] < 1:
        app.logger.warning("⚠️  VT_THREADS below 1, falling back to a single worker")
        app.config['VT_THREADS'] = 1

    # Initialize extensions
    db.init_app(app)

    # Register models with SQLAlchemy metadata
    from vtorus import models  # noqa: F401

    # Register CLI commands
    from vtorus.cli import register_commands
    register_commands(app)

    return app


def init_database(app):
    """Create the run history tables if they do not exist"""
    with app.app_context():
        from sqlalchemy import inspect

        inspector = inspect(db.engine)
        existing_tables = inspector.get_table_names()

        if 'verification_runs' not in existing_tables:
            app.logger.info("Creating database tables...")
            db.create_all()
            app.logger.info("Database tables created successfully")
        else:
            app.logger.debug("Tables already exist, skipping creation")
