import pytest

from qcss import build_tower


@pytest.fixture(scope="session")
def ctx4():
    return build_tower(2, 2)


@pytest.fixture(scope="session")
def ctx8():
    return build_tower(2, 3)


@pytest.fixture(scope="session")
def ctx9():
    return build_tower(3, 2)


@pytest.fixture(scope="session")
def small_towers():
    # q in {2, 3, 4, 5, 7, 8, 9}: one tower per prime power
    return {q: build_tower(p, n)
            for q, (p, n) in {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1),
                              7: (7, 1), 8: (2, 3), 9: (3, 2)}.items()}
