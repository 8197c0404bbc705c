"""Tests for the error-scan harness and report serialization."""

import numpy as np
import pytest

from mlpade import (
    DomainError,
    GridSpec,
    classify,
    emit_report,
    error_scan,
    format_shortest,
    inverse_error_scan,
)
from mlpade.special import rgamma

SMALL_GRID = GridSpec(1e-4, 1e4, 400, include_zero=True)


def test_grid_validation():
    with pytest.raises(DomainError):
        GridSpec(0.0, 1.0, 10)
    with pytest.raises(DomainError):
        GridSpec(2.0, 1.0, 10)
    with pytest.raises(DomainError):
        GridSpec(1.0, 2.0, 1)
    with pytest.raises(DomainError):
        GridSpec(1.0, 2.0, 10, scale="cubic")


def test_grid_points():
    g = GridSpec(1.0, 100.0, 3, include_zero=True)
    assert g.points() == [0.0, 1.0, 10.0, 100.0]
    g = GridSpec(1.0, 3.0, 3, scale="linear")
    assert g.points() == [1.0, 2.0, 3.0]


def test_format_shortest():
    assert format_shortest(1.0) == "1"
    assert format_shortest(0.5) == "0.5"
    assert format_shortest(0.1) == "0.1"
    v = 0.0034312787141753676
    assert float(format_shortest(v)) == v


def test_scan_report_fields():
    report = error_scan(classify(0.5, 1.5), SMALL_GRID)
    assert report.max_abs_error == max(s[3] for s in report.samples)
    assert any(s[0] == report.argmax_x and s[3] == report.max_abs_error
               for s in report.samples)
    # error is exactly zero at the origin by construction
    assert report.samples[0] == (0.0, rgamma(1.5), rgamma(1.5), 0.0)
    # shared asymptotics: tail error well below the peak
    assert report.samples[-1][3] < report.max_abs_error


def test_scan_determinism():
    a = emit_report(error_scan(classify(0.5, 1.0), SMALL_GRID), "csv")
    b = emit_report(error_scan(classify(0.5, 1.0), SMALL_GRID), "csv")
    assert a == b


def test_csv_format():
    data = emit_report(error_scan(classify(0.5, 1.5), SMALL_GRID), "csv")
    lines = data.decode("ascii").split("\n")
    assert lines[0] == "x,approx,oracle,abs_error"
    assert lines[1] == "0,1.1283791670955126,1.1283791670955126,0"
    assert lines[-1] == ""  # trailing LF
    assert b"\r" not in data
    # every field round-trips to a double
    for line in lines[1:-1]:
        assert len([float(f) for f in line.split(",")]) == 4


def test_summary_format():
    report = error_scan(classify(1.0, 2.0), SMALL_GRID)
    line = emit_report(report, "summary").decode("ascii")
    fields = line.strip().split(",")
    assert fields[0] == "1" and fields[1] == "2"
    assert float(fields[2]) == report.max_abs_error
    assert float(fields[3]) == report.argmax_x
    with pytest.raises(DomainError):
        emit_report(report, "json")


def test_grid_refinement_never_loses_error():
    params = classify(0.5, 1.5)
    coarse = error_scan(params, GridSpec(1e-4, 1e4, 500, include_zero=True))
    fine = error_scan(params, GridSpec(1e-4, 1e4, 1000, include_zero=True))
    assert fine.max_abs_error >= coarse.max_abs_error - 1e-6


def test_inverse_scan_exponential_regime_is_exact():
    # alpha = beta = 1: both the algebraic and bisected inverse are -ln(y)
    grid = GridSpec(1e-3, 1.0, 40)
    report = inverse_error_scan(classify(1.0, 1.0), grid)
    # residual comes from the bisection tolerance only
    assert report.max_abs_error <= 1e-6
    assert report.max_rel_error <= 1e-6


def test_inverse_scan_beta_one():
    grid = GridSpec(1e-2, 1.0, 30)
    report = inverse_error_scan(classify(0.5, 1.0), grid)
    assert report.max_abs_error > 0.0
    ys = [s[0] for s in report.samples]
    i = int(np.argmin(np.abs(np.array(ys) - 0.5)))
    assert report.samples[i][3] < 0.2
    # boundary y = rgamma(beta): both inverses are zero
    assert report.samples[-1][0] == 1.0
    assert report.samples[-1][3] <= 1e-6


def test_inverse_scan_rejects_out_of_domain_grid():
    with pytest.raises(DomainError):
        inverse_error_scan(classify(0.5, 0.5), GridSpec(1e-2, 1.0, 10))
