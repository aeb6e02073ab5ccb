import importlib

import pytest

from gkod.numtheory import sieve


@pytest.fixture(scope="session")
def sieved():
    """Sieve covering every materializable graph."""
    return sieve(10**5 + 10)


@pytest.fixture(scope="session")
def big_sieve():
    """Covers 5^10 = 9765625."""
    return sieve(5**10)


def _kernel_modules():
    mods = [importlib.import_module("gkod._pykernels")]
    try:
        mods.append(importlib.import_module("gkod._ckernels"))
    except ImportError:
        pass
    return mods


KERNEL_MODULES = _kernel_modules()


@pytest.fixture(params=KERNEL_MODULES, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def kernel_module(request):
    return request.param
