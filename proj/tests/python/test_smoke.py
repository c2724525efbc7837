import pytest

import etaq


@pytest.fixture(scope="module")
def catalog():
    return etaq.Catalog()


def test_version_and_levels():
    assert etaq.__version__ == "0.1.0"
    assert etaq.SUPPORTED_LEVELS == (2, 3, 4, 5, 7, 13)


def test_gf2_series_basics():
    s = etaq.Gf2Series.from_support(-1, 8, [-1, 3, 7])
    assert s.val == -1
    assert s.valid_to == 8
    assert s.coeff(3) == 1
    assert s.coeff(4) == 0
    assert s.support(-1, 8) == [-1, 3, 7]
    assert (s + s) == etaq.Gf2Series.zero(-1, 8)
    with pytest.raises(IndexError):
        s.coeff(9)


def test_int_series_round_trips_big_integers():
    big = 2**100 + 7
    s = etaq.IntSeries(0, [1, -24, big])
    assert s.coeff(2) == big
    assert s.coeffs() == [1, -24, big]
    square = s * s
    assert square.coeff(0) == 1
    assert square.coeff(1) == -48
    with pytest.raises(ValueError):
        etaq.IntSeries(0, [2, 1]).inverse()  # leading coefficient is not a unit


def test_expand_j_integer_anchors(catalog):
    entry = catalog.expand_ints("j", 2)
    assert entry.precision == 2
    ints = entry.ints
    assert ints is not None
    assert ints.coeff(-1) == 1
    assert ints.coeff(0) == 744
    assert ints.coeff(1) == 196884
    assert ints.coeff(2) == 21493760


def test_coefficients_beyond_machine_words(catalog):
    entry = catalog.expand_ints("j", 30)
    c30 = entry.ints.coeff(30)
    assert c30 > 2**64
    assert c30 % 2 == catalog.coeff_parity("j", 30, 30)


def test_parity_matches_integer_reduction(catalog):
    entry = catalog.expand_ints("f3+", 120)
    bits = etaq.reduce_mod2(entry.ints)
    assert etaq.agree_on(bits, entry.bits, -1, 120)


def test_precision_errors_surface_as_index_error(catalog):
    with pytest.raises(IndexError):
        etaq.Gf2Series.one(5).coeff(6)
    with pytest.raises(IndexError):
        etaq.verify_lemma(catalog, "a3+", 100, 50)
    with pytest.raises(IndexError):
        catalog.coeff_parity("j", 10, 5)


def test_unsupported_ids_surface_as_value_error():
    with pytest.raises(ValueError):
        etaq.parse_hauptmodul_id("j6")
    with pytest.raises(ValueError):
        etaq.parse_family_id("T99X")
    with pytest.raises(ValueError):
        etaq.Catalog(int_cap=50).expand_ints("j", 51)


def test_solve_form():
    oblong = etaq.QuadraticFormId(etaq.FormShape.OBLONG, 1)
    assert etaq.solve_form(oblong, 6) == 2
    assert etaq.solve_form(oblong, 5) is None
    pent = etaq.QuadraticFormId(etaq.FormShape.PENT_MINUS, 2)
    assert etaq.solve_form(pent, 4) == 1
    assert str(pent) == "2l(3l-1)"


def test_lemma_verification(catalog):
    report = etaq.verify_lemma(catalog, "a3+", 400)
    assert report.ok
    assert report.counterexamples == []
    assert report.n_hi == 400
    spec = etaq.lemma_spec(etaq.LemmaId.B7)
    assert spec.rhs_offset == 1
    assert etaq.lemma_shifts(etaq.LemmaId.B3, 25) == [-1, 3, 11, 23]
    assert report.as_dict()["lemma"] == "a3+"


def test_family_sweep_with_hypothesis_skips(catalog):
    summary = etaq.verify_family(catalog, "T31A", 10)
    assert summary.ok
    assert summary.passed == 8
    assert summary.skipped_t == [1, 5]
    assert summary.failure is None
    assert etaq.required_precision("T31A", 10) == 659


def test_level7_even_family_genuinely_fails(catalog):
    summary = etaq.verify_family(catalog, "T42B", 1)
    assert not summary.ok
    assert summary.failed == 1
    failure = summary.failure
    assert failure is not None
    assert failure.verdict == etaq.Verdict.FAIL
    assert failure.claim.lo == 13
    assert failure.claim.hi == 21
    assert failure.witnesses == []
    assert failure.hypothesis_holds
    # The three candidate positions all carry odd coefficients.
    for n in (13, 17, 21):
        assert catalog.coeff_parity("g7+", n, 21) == 1


def test_run_verify_all_small(catalog):
    options = etaq.SuiteOptions()
    options.n_max = 400
    options.t_max = 3
    options.cor_t_max = 3
    report = etaq.run_verify_all(catalog, options)
    assert not report.ok
    assert report.failures() == ["sweeps/T42B"]
    assert [stage.name for stage in report.stages] == [
        "collapse",
        "support",
        "lemmas",
        "sweeps",
        "table",
    ]
    assert report.stages[0].details["n_max"] == 400


def test_fault_injection_is_detected(catalog):
    options = etaq.SuiteOptions()
    options.n_max = 400
    options.t_max = 3
    options.cor_t_max = 3
    baseline = set(etaq.run_verify_all(catalog, options).failures())
    forked = catalog.fork_with_bit_flip("j", 399)
    corrupted = set(etaq.run_verify_all(forked, options).failures())
    assert corrupted - baseline


def test_table5_rows(catalog):
    payload = etaq.table5(catalog, 3)
    assert payload["t_max"] == 3
    rows = payload["rows"]
    assert [row["N"] for row in rows] == [2, 3, 4, 5, 7, 13]
    assert rows[0]["progression"] == "7 mod 8"
    assert rows[0]["odd"]["hypothesis"] is None
    assert rows[1]["odd"]["hypothesis"] == "3t(t+1) != l(l+1)"
    for row in rows:
        assert row["odd"]["failed"] == 0
        assert row["even"]["failed"] == 0
