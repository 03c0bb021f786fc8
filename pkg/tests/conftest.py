import contextlib
import io

import pytest

from vifdiag import builtin, ols_fit, orthonormal_fit, theorem1_test
from vifdiag.cli import main


@pytest.fixture(scope="session")
def wissel_spec():
    return builtin("wissel").model_spec(response="D")


@pytest.fixture(scope="session")
def kg_spec():
    return builtin("klein-goldberger").model_spec(response="C")


@pytest.fixture(scope="session")
def wissel_fit(wissel_spec):
    return ols_fit(wissel_spec)


@pytest.fixture(scope="session")
def wissel_ortho(wissel_spec):
    return orthonormal_fit(wissel_spec)


@pytest.fixture(scope="session")
def kg_fit(kg_spec):
    return ols_fit(kg_spec)


@pytest.fixture(scope="session")
def kg_ortho(kg_spec):
    return orthonormal_fit(kg_spec)


@pytest.fixture(scope="session")
def wissel_report(wissel_spec):
    return theorem1_test(wissel_spec, alpha=0.05)


@pytest.fixture(scope="session")
def kg_report(kg_spec):
    return theorem1_test(kg_spec, alpha=0.05)


def run_cli(*argv):
    """Invoke the CLI in process; returns (exit_code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def cli():
    return run_cli
