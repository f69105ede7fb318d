import pytest

from weylwin import GroupSpec, symmetric_rep


@pytest.fixture
def torus2():
    return symmetric_rep((1,), [((1,), 1), ((-1,), 1)])


@pytest.fixture
def torus4():
    return symmetric_rep((1,), [((1,), 2), ((-1,), 2)])


@pytest.fixture
def gl2_adjoint():
    return symmetric_rep((2,), [((0, 0), 2), ((1, -1), 1), ((-1, 1), 1)])


@pytest.fixture
def gl2_2std():
    return symmetric_rep((2,), [((1, 0), 2), ((0, 1), 2), ((-1, 0), 2), ((0, -1), 2)])


@pytest.fixture
def gl3_std():
    return symmetric_rep(
        (3,),
        [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1),
         ((-1, 0, 0), 1), ((0, -1, 0), 1), ((0, 0, -1), 1)],
    )


@pytest.fixture
def acceptance_reps(torus2, torus4, gl2_adjoint, gl2_2std, gl3_std):
    return {
        "torus2": torus2,
        "torus4": torus4,
        "gl2_adjoint": gl2_adjoint,
        "gl2_2std": gl2_2std,
        "gl3_std": gl3_std,
    }
