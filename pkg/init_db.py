#!/usr/bin/env python3
"""
Initialize the verification run history database
"""
from vtorus import create_app, init_database


if __name__ == '__main__':
    app = create_app()
    init_database(app)
    print(f"✓ Run history ready at {app.config['SQLALCHEMY_DATABASE_URI']}")
