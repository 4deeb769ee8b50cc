import networkx as nx
import pytest

from vtorus.utils.decorators import exhaustive_guard, graph_order
from vtorus.utils.errors import ExportError, InstanceTooLarge, ParamTooSmall, VtError
from vtorus.utils.parallel import parallel_map, worker_count
from vtorus.utils.settings import get_setting, read_environment


class Scanner:

    @exhaustive_guard
    def scan(self, g):
        return graph_order(g)


class TestSettings:

    def test_environment_defaults(self, monkeypatch):
        monkeypatch.delenv('VT_PATH_CAP', raising=False)
        monkeypatch.setenv('VT_SEED', '42')
        settings = read_environment()
        assert settings['VT_PATH_CAP'] == 1_000_000
        assert settings['VT_SEED'] == 42

    def test_threads_clamped(self, monkeypatch):
        monkeypatch.setenv('VT_THREADS', '0')
        assert read_environment()['VT_THREADS'] == 1

    def test_app_config_wins(self, app):
        app.config['VT_SEED'] = 7
        assert get_setting('VT_SEED') == 7


class TestParallel:

    def test_order_preserved(self, app):
        assert parallel_map(lambda n: n * n, range(20)) == [n * n for n in range(20)]

    def test_worker_cap(self, app):
        assert worker_count(100) == 2
        assert worker_count(0) == 1


class TestGuard:

    def test_refuses_large(self, app):
        app.config['VT_MAX_EXHAUSTIVE_VERTICES'] = 5
        with pytest.raises(InstanceTooLarge):
            Scanner().scan(nx.cycle_graph(6))

    def test_override(self, app):
        app.config['VT_MAX_EXHAUSTIVE_VERTICES'] = 5
        assert Scanner().scan(nx.cycle_graph(6), allow_large=True) == 6

    def test_vt_graph_order(self, app, vt22):
        assert Scanner().scan(vt22) == 8


class TestErrors:

    def test_payload(self):
        error = ParamTooSmall('r and s must be ≥ 2', r=1, s=3)
        assert isinstance(error, VtError)
        assert error.to_dict() == {
            'error': 'param_too_small',
            'message': 'r and s must be ≥ 2',
            'details': {'r': '1', 's': '3'},
        }

    def test_export_error_names_path(self):
        error = ExportError('cannot write out.csv', '/tmp/x/out.csv')
        assert str(error) == 'cannot write out.csv (/tmp/x/out.csv)'
        assert error.path == '/tmp/x/out.csv'
