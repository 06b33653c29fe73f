from types import SimpleNamespace

import pytest

import firefight.bench as bench_mod
from firefight import (
    Graph, bench_dir, gen_planted, run_algo, serialize_instance, solve_exact,
    Instance,
)


def _write_corpus(path, tag, count, base_seed):
    for i in range(count):
        inst = gen_planted(tag, 4 + i % 4, 2, 0.35, base_seed + i)
        (path / f"{tag}{i:02d}.ff").write_text(serialize_instance(inst))


def test_run_algo_dispatch():
    inst = gen_planted("threshold", 6, 2, 0.3, 510)
    exact = run_algo(inst, "exact")
    fpt = run_algo(inst, "threshold")
    assert fpt.best_saved == exact.best_saved
    star_inst = gen_planted("star_forest", 6, 2, 0.3, 511)
    assert run_algo(star_inst, "stars").best_saved == \
        solve_exact(star_inst.graph, star_inst.source).best_saved
    with pytest.raises(ValueError):
        run_algo(inst, "dijkstra")
    bare = Instance(Graph.from_edges(3, [(0, 1), (1, 2)]), 0,
                    modulator=None, class_tag=None, demand=None)
    with pytest.raises(ValueError):
        run_algo(bare, "threshold")


def test_bench_dir_csv_layout(tmp_path):
    _write_corpus(tmp_path, "threshold", 4, 520)
    out = tmp_path / "runs.csv"
    records = bench_dir(tmp_path, ["exact", "threshold"], True, out, jobs=1)
    lines = out.read_text().splitlines()
    assert lines[0] == "# schema=ff-bench-v1"
    assert lines[1] == "name,algo,n,m,mod_size,saved,ms,explored,agree"
    assert len(lines) == 2 + 8
    # rows come out in sorted instance order, algos in the requested order
    names = [r.name for r in records]
    assert names == sorted(names)
    assert [r.algo for r in records[:2]] == ["exact", "threshold"]
    assert all(r.agree is True for r in records)
    by_name = {}
    for r in records:
        by_name.setdefault(r.name, set()).add(r.saved)
    assert all(len(v) == 1 for v in by_name.values())


def test_bench_dir_stars_pool(tmp_path):
    _write_corpus(tmp_path, "star_forest", 3, 530)
    out = tmp_path / "runs.csv"
    # jobs=2 exercises the process pool path
    records = bench_dir(tmp_path, ["exact", "stars"], True, out, jobs=2)
    assert len(records) == 6
    assert all(r.agree is True for r in records)


def test_bench_dir_deterministic(tmp_path):
    _write_corpus(tmp_path, "threshold", 3, 540)
    a = bench_dir(tmp_path, ["exact"], False, tmp_path / "a.csv", jobs=1)
    b = bench_dir(tmp_path, ["exact"], False, tmp_path / "b.csv", jobs=1)
    key = lambda r: (r.name, r.algo, r.n, r.m, r.mod_size, r.saved, r.explored, r.agree)
    assert [key(r) for r in a] == [key(r) for r in b]
    # without the oracle the agree column stays empty
    assert all(r.agree is None for r in a)
    for line in (tmp_path / "a.csv").read_text().splitlines()[2:]:
        assert line.endswith(",")


def test_bench_dir_disagreement_reproducer(tmp_path, monkeypatch):
    _write_corpus(tmp_path, "threshold", 2, 550)
    out = tmp_path / "runs.csv"
    # stub the oracle so the harness sees a solver mismatch
    monkeypatch.setattr(
        bench_mod, "solve_exact",
        lambda g, s, max_n=None: SimpleNamespace(best_saved=-1, explored=0),
    )
    with pytest.raises(RuntimeError, match="disagreement"):
        bench_dir(tmp_path, ["threshold"], True, out, jobs=1)
    repro = tmp_path / "runs.csv.reproducer.txt"
    assert repro.exists()
    text = repro.read_text()
    assert text.startswith("# disagreement")
    assert "threshold" in text


def test_bench_dir_input_errors(tmp_path):
    with pytest.raises(ValueError):
        bench_dir(tmp_path, ["exact"], False, tmp_path / "x.csv")
    _write_corpus(tmp_path, "threshold", 1, 560)
    with pytest.raises(ValueError):
        bench_dir(tmp_path, ["quantum"], False, tmp_path / "x.csv")
