import numpy as np
import pytest

from cfgstego import bmp
from cfgstego.grammar import default_grammar
from cfgstego.lexicon import load_lexicon


@pytest.fixture(scope="session")
def grammar():
    return default_grammar()


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon()


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_image(rng, width, height):
    return bmp.Image(rng.integers(0, 256, (height, width, 3), dtype=np.uint8))
