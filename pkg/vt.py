#!/usr/bin/env python3
"""
Entry point for the vt command line.

    python vt.py build --r 4 --s 5 --out g.json
    python vt.py verify --r 2 --s 3 --all
"""
import click
from flask.cli import FlaskGroup

from vtorus import create_app


@click.group(cls=FlaskGroup, create_app=create_app, add_default_commands=False, add_version_option=False)
def cli():
    """Villarceau torus analysis"""


if __name__ == '__main__':
    cli()
