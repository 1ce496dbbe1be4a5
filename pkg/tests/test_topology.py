import pytest

from extquot import reference
from extquot.complex_quotient import decompose_complex
from extquot.numtheory import divisor_sigma, divisors
from extquot.partitions import partitions_pairs
from extquot.real_quotient import decompose_real
from extquot.topology import (
    betti,
    betti_from_catalog,
    betti_table,
    duality_report,
    euler_characteristic,
    ktheory_table,
    ktheory_ranks,
    render_betti_csv,
    render_betti_markdown,
    render_ktheory_csv,
    top_betti,
)


def test_betti_examples():
    assert betti(6, 1).ranks == (20, 9, 1)
    assert betti(8, 2).ranks == (40, 27, 5)
    assert betti(1, 1).ranks == (1,)


def test_betti_rejects_bad_k():
    with pytest.raises(ValueError):
        betti(6, 4)
    with pytest.raises(ValueError):
        betti(0, 1)


def test_ktheory_examples():
    assert ktheory_ranks(6, 1) == ktheory_ranks(6, 6)
    assert (ktheory_ranks(6, 1).k0, ktheory_ranks(6, 1).k1) == (21, 9)
    assert (ktheory_ranks(16, 4).k0, ktheory_ranks(16, 4).k1) == (609, 569)
    assert (ktheory_ranks(20, 10).k0, ktheory_ranks(20, 10).k1) == (2004, 1956)


def test_euler_examples():
    assert euler_characteristic(6, 1) == 12 == divisor_sigma(6)
    assert euler_characteristic(12, 1) == 28
    assert euler_characteristic(1, 1) == 1


def test_top_betti_examples():
    assert top_betti(8) == (2, 5)
    assert top_betti(10) == (3, 1)
    assert top_betti(6) == (2, 1)


def test_top_betti_degenerate_n2():
    """n = 2 is the one case where the P_2 formula undercounts: the partition
    with a single part 2 has gcd 2 and doubles its point component."""
    degree, rank = top_betti(2)
    assert (degree, rank) == (0, 3)
    assert betti(2, 1).ranks == (3,)
    assert partitions_pairs(1) == 2  # the uncorrected closed form


def test_betti_agrees_with_catalog_paths():
    for n in range(1, 31):
        for k in divisors(n):
            streamed = betti(n, k)
            cplx = decompose_complex(n, k)
            real = decompose_real(n, k)
            assert streamed == betti_from_catalog(cplx) == betti_from_catalog(real)
            assert all(entry.multiplicity >= 1 for entry in cplx.entries)
            assert streamed.ranks[0] == cplx.total_components() == real.total_components()


def test_b0_counts_components():
    for n, k in ((6, 1), (6, 6), (12, 4), (16, 8)):
        assert betti(n, k).ranks[0] == decompose_complex(n, k).total_components()


def test_duality_report_12_2():
    report = duality_report(12, 2)
    assert report.k_dual == 6
    assert report.ok and report.betti_equal
    pair = (ktheory_ranks(12, 2), ktheory_ranks(12, 6))
    assert [(kt.k0, kt.k1) for kt in pair] == [(176, 144), (176, 144)]


def test_duality_report_self_dual():
    report = duality_report(16, 4)
    assert report.k_dual == 4 and report.ok
    assert not report.partitions_with_singularity_differences()
    assert all(line.descriptor_singularities_equal for line in report.lines)


def test_duality_report_6_1_singularity_differences():
    report = duality_report(6, 1)
    assert report.ok
    diffs = [str(p) for p in report.partitions_with_singularity_differences()]
    assert diffs == ["2+2+2", "1+1+2+2", "1+1+1+1+1+1"]
    # at the level of raw group data, 3+3 differs too (A^1 vs A^1 / +-1),
    # but the quotient varieties there are isomorphic
    descriptor_diffs = [str(l.partition) for l in report.lines if not l.descriptor_singularities_equal]
    assert descriptor_diffs == ["3+3", "2+2+2", "1+1+2+2", "1+1+1+1+1+1"]


def test_square_free_answers_do_not_vary_with_k():
    for n in (6, 10, 14, 15, 21, 30):
        vectors = {betti(n, k).ranks for k in divisors(n)}
        assert len(vectors) == 1


def test_betti_table_rows_and_parallel_determinism():
    serial = betti_table(20, 2, even_only=True, jobs=1)
    assert [v.n for v in serial] == [2, 4, 6, 8, 10, 12, 14, 16, 18, 20]
    parallel = betti_table(20, 2, even_only=True, jobs=2)
    assert serial == parallel


def test_render_betti_csv_round_trips_reference_table():
    vectors = betti_table(45, 1)
    assert render_betti_csv(vectors) == reference.fixture_text("betti_k1")


def test_render_ktheory_csv_round_trips_reference_table():
    rows = ktheory_table(20)
    assert render_ktheory_csv(rows) == reference.fixture_text("ktheory")


def test_render_empty_and_markdown():
    assert render_betti_csv([]) == "n\n"
    text = render_betti_markdown(betti_table(6, 1))
    assert text.splitlines()[0] == "| n | b_0 | b_1 | b_2 |"
    assert "| 6 | 20 | 9 | 1 |" in text
