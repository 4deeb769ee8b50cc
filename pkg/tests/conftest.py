import pytest

from vtorus import create_app, db
from vtorus.models import TorusParams
from vtorus.services.torus_service import TorusService


@pytest.fixture
def app(tmp_path):
    app = create_app({
        'TESTING': True,
        'SQLALCHEMY_DATABASE_URI': 'sqlite:///:memory:',
        'VT_THREADS': 2,
        'VT_OUTPUT_DIR': str(tmp_path),
        'VT_SEARCH_BUDGET': 50,
    })
    with app.app_context():
        db.create_all()
        yield app
        db.session.remove()
        db.drop_all()


@pytest.fixture
def runner(app):
    return app.test_cli_runner()


def vt(r, s):
    return TorusService().build_vt(TorusParams(r, s))


@pytest.fixture
def vt22():
    return vt(2, 2)


@pytest.fixture
def vt23():
    return vt(2, 3)


@pytest.fixture
def vt44():
    return vt(4, 4)


@pytest.fixture
def vt45():
    return vt(4, 5)


@pytest.fixture
def vt46():
    return vt(4, 6)
