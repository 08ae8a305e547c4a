"""Handwritten CSV factories matching the solver's documented schemas."""

import pytest

HISTORY_HEADER = "iter,pair,residual,ritz_value,beta,basis_rank,dropped"
SUMMARY_HEADER = "problem,method,beta,mean_iters,std_iters,converged_runs,trials"


def write_history(path, n_iter=30, pairs=1, start=1.0, rate=0.7, beta=0.25):
    lines = [HISTORY_HEADER]
    for k in range(n_iter + 1):
        for pair in range(1, pairs + 1):
            res = start * (rate ** k) * (1.0 + 0.1 * pair)
            ritz = 0.1 * pair + res
            b = 0.0 if k < 2 else beta
            rank = 0 if k == 0 else 2 + pairs
            lines.append(f"{k},{pair},{res!r},{ritz!r},{b!r},{rank},0")
    path.write_text("\n".join(lines) + "\n")
    return path


def write_summary(path, problem="demo", methods=None):
    methods = methods or [
        ("base", "", 120.0, 10.0, 5, 5),
        ("depth1", "0.25", 90.0, 8.0, 5, 5),
        ("heavyball", "0.1", 60.0, 2.0, 5, 5),
    ]
    lines = [SUMMARY_HEADER]
    for method, beta, mean, std, conv, trials in methods:
        lines.append(f"{problem},{method},{beta},{mean!r},{std!r},{conv},{trials}")
    path.write_text("\n".join(lines) + "\n")
    return path


@pytest.fixture
def history_csv(tmp_path):
    return write_history(tmp_path / "run.csv")


@pytest.fixture
def block_history_csv(tmp_path):
    return write_history(tmp_path / "block.csv", pairs=2)


@pytest.fixture
def summary_csv(tmp_path):
    return write_summary(tmp_path / "summary.csv")
