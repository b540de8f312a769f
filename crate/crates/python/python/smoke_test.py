"""Smoke test for the compiled `bqt` extension.

Build it with `cargo build -p bqt-py --features extension-module --release`,
copy `target/release/libbqt.so` to `bqt.so` somewhere on `sys.path`, then run
this script.
"""

import sys

import bqt


def main() -> int:
    q = bqt.Scalar("q")
    assert str((q * q - 1) / (q - 1)) == "q+1"
    assert bqt.Scalar("(q^2 - t)/(1 - q*t)") == (q ** 2 - "t") / (1 - q * "t")

    m = bqt.Module(2)
    assert m.rank == 2
    assert m.act('[["X",1]]', "1") == "x_1"
    assert m.act('[["T",1]]', "x_1") == "(-q+1)*x_1 + x_2"
    assert m.act_b('[["dminus"]]', "x_1", 1) == (0, "(q-1)*x_1 + (q-1)*x_2")
    assert len(m.basis(2)) == 3

    ok, reports = bqt.check("daha", 2, dmax=2)
    assert ok and len(reports) == 11
    ok, _ = bqt.check("daha", 3, kind="murnaghan", shape="1", dmax=1)
    assert ok

    pol = bqt.Limit("pol")
    assert pol.rows(0, 6)[0] == [1, 1, 2, 3, 5, 7, 11]
    assert pol.table(1, 2)["cells"][0]["n_stabilized"] is not None
    assert pol.towers(1, 1)[0][1][0] == "x_1"

    try:
        bqt.Module(3, kind="murnaghan", shape="1,2")
    except ValueError as e:
        assert "weakly decreasing" in str(e)
    else:
        raise AssertionError("bad shape accepted")

    print("bqt smoke test: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
