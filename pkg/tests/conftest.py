import pytest

from sx.corpus import fixture


@pytest.fixture(scope="session")
def dfm():
    return fixture("dfm_s3_16").complex


@pytest.fixture(scope="session")
def dfm_ball():
    return fixture("dfm_b4_16").complex


@pytest.fixture(scope="session")
def sigma():
    return fixture("bl_sigma3_16").complex


@pytest.fixture(scope="session")
def ziegler_b1():
    return fixture("ziegler_b1").complex


@pytest.fixture(scope="session")
def ziegler_b2():
    return fixture("ziegler_b2").complex


@pytest.fixture(scope="session")
def ziegler_s2():
    return fixture("ziegler_s2_10").complex


@pytest.fixture(scope="session")
def lutz_b1():
    return fixture("lutz_b1").complex


@pytest.fixture(scope="session")
def lutz_b2():
    return fixture("lutz_b2").complex


@pytest.fixture(scope="session")
def lutz_s2():
    return fixture("lutz_s2_8").complex
