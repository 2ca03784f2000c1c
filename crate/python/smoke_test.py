#!/usr/bin/env python3
"""Smoke test for the pyroclast_py extension module.

Builds nothing itself: it locates the cdylib produced by
`cargo build -p pyroclast-py` (debug or release), exposes it under the
importable module name and exercises one check per binding.
"""

import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def locate_library() -> pathlib.Path:
    candidates = [
        ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libpyroclast_py.so", "libpyroclast_py.dylib", "pyroclast_py.dll")
    ]
    for path in candidates:
        if path.exists():
            return path
    sys.exit(
        "could not find the built extension; run `cargo build -p pyroclast-py` first"
    )


def import_module():
    lib = locate_library()
    staging = pathlib.Path(tempfile.mkdtemp(prefix="pyroclast_py_"))
    suffix = ".pyd" if lib.suffix == ".dll" else ".so"
    shutil.copy2(lib, staging / f"pyroclast_py{suffix}")
    sys.path.insert(0, str(staging))
    import pyroclast_py

    return pyroclast_py


def main() -> None:
    m = import_module()
    print(f"pyroclast_py {m.__version__} loaded")

    # lattice geometry: reference site counts are exact
    lat = m.Lattice(4, 4, 4)
    assert lat.site_count() == 1444, lat.site_count()
    assert m.Lattice(1, 1, 1).site_count() == 40
    src, tgt = lat.face_sizes()
    assert src == tgt == 236
    print("lattice counts: ok")

    # stabilizer micro scale: two triangles fuse into a tetrahedron
    tri2 = m.Stabilizer(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    tri2.fuse_success(2, 5, "phi+")
    assert tri2.num_qubits() == 4
    edges, _layer = tri2.graph_form()
    k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert m.lc_equivalent(4, edges, k4), edges
    print("triangle fusion -> tetrahedron: ok")

    # failure branch: two disjoint pairs
    tri2 = m.Stabilizer(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    tri2.fuse_failure(2, 5, +1, +1)
    edges, _ = tri2.graph_form()
    assert len(edges) == 2 and not set(edges[0]) & set(edges[1]), edges
    print("triangle fusion failure -> two pairs: ok")

    # chain and triangle are LC-equivalent; a disconnected graph is not
    assert m.lc_equivalent(3, [(0, 1), (1, 2)], [(0, 1), (0, 2), (1, 2)])
    assert not m.lc_equivalent(3, [(0, 1)], [(0, 1), (0, 2), (1, 2)])
    print("local-complementation orbits: ok")

    # full scenario + certification suite
    suite = m.run_fusion_suite()
    assert len(suite) >= 12
    failures = [name for (name, passed, _) in suite if not passed]
    assert not failures, failures
    assert any(name == "bowtie" and detail == "7 qubits" for (name, _, detail) in suite)
    print(f"fusion suite: {len(suite)} checks ok")

    # percolation: degenerate p values and determinism
    spanning, largest, fraction = m.sample_spanning(m.Lattice(1, 1, 1), 1.0, 7, 0)
    assert spanning and largest == 40 and fraction == 1.0
    spanning, largest, fraction = m.sample_spanning(m.Lattice(1, 1, 1), 0.0, 7, 0)
    assert not spanning and largest == 0 and fraction == 0.0
    rows_a = m.sweep(2, 2, 2, 0.0, 1.0, 0.5, 40, 11)
    rows_b = m.sweep(2, 2, 2, 0.0, 1.0, 0.5, 40, 11)
    assert [r.spanning_count for r in rows_a] == [r.spanning_count for r in rows_b]
    assert rows_a[0].spanning_prob == 0.0 and rows_a[-1].spanning_prob == 1.0
    assert all(r.ci_lo <= r.spanning_prob <= r.ci_hi for r in rows_a)
    print("percolation sampling: ok")

    # table of reference shapes: exact qubit counts
    rows = m.table1(0.75, 10, 3)
    assert [q for (_, _, _, q, _, _) in rows] == [
        1444, 1680, 2352, 3136, 3556, 3976, 4984, 5460, 6636, 7168, 7700, 8232,
    ]
    print("scaling table counts: ok")

    # threshold estimation on a small lattice finds a crossing
    p_star, lo, hi = m.estimate_threshold(2, 2, 2, 60, 0.3, 0.99, 0.02, 5)
    assert p_star is not None and 0.3 < p_star < 0.99 and lo <= p_star <= hi
    print(f"threshold estimate: ok (p_star={p_star:.3f})")

    print("smoke test passed")


if __name__ == "__main__":
    main()
