import pytest

import circsimp as cs

ADDER7 = """INPUT(x1)
INPUT(x2)
INPUT(x3)
OUTPUT(s)
OUTPUT(c)
a = XOR(x1, x2)
s = XOR(a, x3)
p = AND(x1, x2)
q = AND(x1, x3)
r = AND(x2, x3)
t = OR(p, q)
c = OR(t, r)
"""


@pytest.fixture(scope="module")
def bench_db():
    return cs.build_database(cs.Basis.BENCH, max_size=5)


def test_read_and_tables():
    c = cs.read_bench(ADDER7)
    assert (c.num_inputs, c.num_outputs, c.size) == (3, 2, 7)
    assert c.truth_tables() == ["96", "e8"]
    assert c.simulate([True, True, False]) == [False, True]


def test_simplify_full_adder(bench_db):
    c = cs.read_bench(ADDER7)
    original = c.copy()
    summary = cs.simplify(c, bench_db)
    assert summary["initial_size"] == 7
    assert summary["final_size"] == 5 == c.size
    assert summary["report"].rstrip().endswith("size 7 -> 5")
    verdict, cex = cs.check_equiv(original, c)
    assert verdict == "equal" and cex is None


def test_counterexample():
    a = cs.read_bench("INPUT(a)\nINPUT(b)\nOUTPUT(y)\ny = AND(a, b)\n")
    b = cs.read_bench("INPUT(a)\nINPUT(b)\nOUTPUT(y)\ny = OR(a, b)\n")
    verdict, cex = cs.check_equiv(a, b)
    assert verdict == "counterexample"
    assert a.simulate(cex) != b.simulate(cex)


def test_database(bench_db, tmp_path):
    assert bench_db.cap == 5
    assert bench_db.lookup((0xAA, 0xCC, 0xF0)) == 0
    path = str(tmp_path / "b5.simpdb")
    bench_db.save(path)
    back = cs.load_database(path)
    assert back.num_classes == bench_db.num_classes
    assert back.stats() == bench_db.stats()


def test_formats_and_generators(tmp_path):
    m = cs.gen_multiplier(3, "karatsuba")
    aig = cs.convert_basis(m, cs.Basis.AIG)
    text = cs.write_aiger(aig)
    back = cs.read_aiger(text.encode())
    assert back.truth_tables() == m.truth_tables()
    path = str(tmp_path / "m.bench")
    cs.write_file(path, m)
    assert cs.read_file(path).truth_tables() == m.truth_tables()
    assert cs.gen_miter("summation", 4).truth_tables() == ["0000"]
    assert "p cnf" in cs.export_cnf(cs.gen_factorization(15))


def test_preprocess_and_errors():
    c = cs.read_bench("INPUT(a)\nINPUT(b)\nOUTPUT(y)\nd = XOR(a, b)\ny = AND(a, b)\n")
    assert cs.preprocess(c)["dangling"] == 1
    with pytest.raises(cs.ParseError):
        cs.read_bench("INPUT(a)\nOUTPUT(b)\nb = FOO(a)\n")
    with pytest.raises(ValueError):
        cs.check_equiv(c, c, mode="bogus")
