"""
Runtime settings shared by the services.

Values come from the active Flask app config when an application context is
pushed (the CLI always runs inside one) and from environment variables
otherwise, so the library can be used without creating an app.
"""
import os

from flask import current_app, has_app_context

DEFAULTS = {
    'VT_THREADS': os.cpu_count() or 1,
    'VT_MAX_EXHAUSTIVE_VERTICES': 24,
    'VT_PATH_CAP': 1_000_000,
    'VT_SEARCH_BUDGET': 1000,
    'VT_SEED': 0,
    'VT_CSV_DELIMITER': ',',
    'VT_OUTPUT_DIR': '.',
}

INTEGER_SETTINGS = {
    'VT_THREADS',
    'VT_MAX_EXHAUSTIVE_VERTICES',
    'VT_PATH_CAP',
    'VT_SEARCH_BUDGET',
    'VT_SEED',
}


def read_environment():
    """Read every known setting from the environment, applying defaults"""
    settings = {}
    for name, default in DEFAULTS.items():
        raw = os.getenv(name)
        if raw is None or raw == '':
            settings[name] = default
        elif name in INTEGER_SETTINGS:
            settings[name] = int(raw)
        else:
            settings[name] = raw
    # A zero or negative worker cap means "no parallelism"
    settings['VT_THREADS'] = max(1, settings['VT_THREADS'])
    return settings


def get_setting(name):
    """Get a setting from the app config if available, else from the environment"""
    if has_app_context() and name in current_app.config:
        return current_app.config[name]
    return read_environment()[name]
