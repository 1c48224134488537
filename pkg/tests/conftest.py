import pytest

from splinedim import load_bundled, to_star_complex


@pytest.fixture(scope="session")
def three_curve_complex():
    """Line plus two circles, tangents x, y, x - y; degrees 1, 2, 2."""
    return to_star_complex(load_bundled("line-two-circles"))


@pytest.fixture(scope="session")
def conic_pencil_complexes():
    """Four geometrically different triples of conics in one pencil."""
    names = ["pencil-conics-1", "pencil-conics-2",
             "pencil-conics-3", "pencil-conics-4"]
    return [to_star_complex(load_bundled(n)) for n in names]


@pytest.fixture(scope="session")
def parabola_cubic_complex():
    """Conic, conic, cubic with one repeated tangent; degrees 2, 2, 3."""
    return to_star_complex(load_bundled("conic-conic-cubic"))
