import forestlink.laplacian as laplacian_module
from forestlink.laplacian import IntegerMatrix
from forestlink.selftest import SUITES, run_selftest


def test_small_run_passes():
    outcomes = run_selftest(3, seed=42)
    assert [o.name for o in outcomes] == [name for name, _ in SUITES]
    assert all(o.ok for o in outcomes)


def test_deterministic_in_seed():
    first = run_selftest(2, seed=9)
    second = run_selftest(2, seed=9)
    assert [(o.name, o.failures) for o in first] == [(o.name, o.failures) for o in second]


def test_injected_sign_bug_is_caught(monkeypatch):
    real = laplacian_module.laplacian_matrix

    def corrupted(graph):
        m = real(graph)
        rows = m.to_rows()
        if m.rows >= 2:
            rows[0][1] = -rows[0][1] - 1
            rows[1][0] = -rows[1][0] - 1
        return IntegerMatrix.from_rows(rows, m.row_labels, m.col_labels)

    monkeypatch.setattr(laplacian_module, "laplacian_matrix", corrupted)
    outcomes = run_selftest(5, seed=7)
    failing = [o for o in outcomes if not o.ok]
    assert failing, "the mutated Laplacian went unnoticed"
    record = failing[0].failures[0][1]
    assert record.files, "failures must dump a reproducing instance"
