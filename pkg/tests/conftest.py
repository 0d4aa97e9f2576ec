"""Test configuration and fixtures"""
import pytest
import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from click.testing import CliRunner

from config.config import get_config
from src.ricci_service import generators
from src.ricci_service.cli import create_cli
from src.utils.corpus import CorpusGenerator


@pytest.fixture(scope='session')
def settings():
    """Testing settings class"""
    return get_config('testing')


@pytest.fixture(scope='session')
def cli():
    """Click command group built with the testing configuration"""
    return create_cli('testing')


@pytest.fixture(scope='function')
def runner():
    return CliRunner()


@pytest.fixture(scope='session')
def petersen():
    return generators.petersen()


@pytest.fixture(scope='session')
def shrikhande():
    return generators.shrikhande()


@pytest.fixture(scope='session')
def rooks4():
    return generators.rooks(4)


@pytest.fixture(scope='session')
def hoffman_singleton():
    return generators.hoffman_singleton()


@pytest.fixture(scope='session')
def c5():
    return generators.cycle(5)


@pytest.fixture(scope='session')
def srg_corpus():
    """label -> graph for every generated strongly regular graph"""
    return CorpusGenerator().srg_corpus()


@pytest.fixture(scope='session')
def regular_corpus():
    return CorpusGenerator().regular_corpus()
