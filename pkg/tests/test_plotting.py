from surfchar import plotting
from surfchar.verifier import Check, VerificationReport

PNG = b"\x89PNG\r\n\x1a\n"


def test_index_bounds_figure(tmp_path):
    path = plotting.plot_index_bounds(range(2, 13), tmp_path / "b.png")
    assert path.read_bytes()[:8] == PNG


def test_summary_handles_every_status(tmp_path):
    report = VerificationReport([
        Check(f"c{i}", "anchor", {}, status) for i, status in enumerate(plotting.STATUS_COLORS)
    ] + [Check("c0", "anchor", {"g": 3}, "pass")])
    path = plotting.plot_check_summary(report, tmp_path / "s.png")
    assert path.read_bytes()[:8] == PNG


def test_write_figures_creates_directory(tmp_path):
    out = plotting.write_figures(VerificationReport([Check("x", "a", {}, "pass")]), tmp_path / "new" / "dir")
    assert [p.name for p in out] == ["index_bounds.png", "check_summary.png"]
    assert all(p.exists() for p in out)
