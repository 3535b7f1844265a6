import pytest

from cscrystal.crystal import enumerate_crystal
from cscrystal.rootsys import Shape, lambda_from_fundamental, rho


def suite_weights():
    """The verification sweep: small dominant weights at ranks 1..3."""
    out = []
    for k in range(4):
        out.append(lambda_from_fundamental((k,), 1))
    for c1 in range(3):
        for c2 in range(3):
            out.append(lambda_from_fundamental((c1, c2), 2))
    for coeffs in [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1)]:
        out.append(lambda_from_fundamental(coeffs, 3))
    return out


def shifted_elements(lam):
    """All tableaux of the rho-shifted crystal of lam."""
    shifted = lam + rho(lam.rank)
    return enumerate_crystal(Shape(shifted.coords), lam.rank)


@pytest.fixture(scope="session")
def suite():
    return suite_weights()
