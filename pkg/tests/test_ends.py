"""End classification, asymptotic models, and the Osserman ledger."""

import numpy as np

from afront.catalog import catalog_build
from afront.ends import (
    NOT_EMBEDDED,
    TYPE_NR,
    TYPE_P,
    TYPE_R,
    asymptotic_deviation,
    asymptotic_model,
    classify_end,
    end_orders,
    osserman_report,
)
from afront.errors import InequalityViolated, NotEmbeddedEnd
from afront.rational import INF, Polynomial, RationalFunction
from afront.surface import DomainSpec, WeierstrassData, validate


def rf(num, den=(1,)):
    return RationalFunction(Polynomial(num), Polynomial(den))


def test_end_orders_examples():
    par = catalog_build("paraboloid")
    assert end_orders(par, 0j) == (-1, -1)
    tc2 = catalog_build("tc2")
    assert end_orders(tc2, INF) == (-2, -1)
    rot = catalog_build("rotational")
    assert end_orders(rot, INF) == (1, -1)
    assert end_orders(rot, 0j) == (-1, 1)


def test_classify_rotational():
    rep = classify_end(catalog_build("rotational", a=2.0), 0j)
    assert rep.asym_type == TYPE_R
    assert abs(rep.b_1 - 2) < 1e-12 and abs(rep.b_minus1) < 1e-12
    assert not rep.swapped


def test_classify_nonrotational():
    rep = classify_end(catalog_build("nonrotational", a=1.0, b=2.0), 0j)
    assert rep.asym_type == TYPE_NR
    assert abs(rep.b_1 - 1) < 1e-12 and abs(rep.b_minus1 - 2) < 1e-12


def test_classify_paraboloid():
    rep = classify_end(catalog_build("paraboloid", b=2.0), 0j)
    assert rep.asym_type == TYPE_P
    assert rep.b_1 == 0 and abs(rep.b_minus1 - 2) < 1e-12


def test_classify_swapped_end():
    rep = classify_end(catalog_build("rotational", a=2.0), INF)
    assert rep.swapped and rep.asym_type == TYPE_R
    assert abs(rep.b_1 - 2) < 1e-12


def test_not_embedded_end():
    rep = classify_end(catalog_build("tc2"), INF)
    assert rep.asym_type == NOT_EMBEDDED and not rep.embedded
    try:
        asymptotic_model(rep)
        assert False, "expected NotEmbeddedEnd"
    except NotEmbeddedEnd:
        pass


def test_embedded_iff_simple_poles_over_catalog():
    from afront.catalog import catalog_list

    for entry in catalog_list():
        data = catalog_build(entry.id)
        for p in data.domain.ends():
            rep = classify_end(data, p)
            expect = (rep.ord_F >= -1 and rep.ord_G >= -1) and (
                rep.ord_F == -1 or rep.ord_G == -1
            )
            assert rep.embedded == expect, entry.id


def test_asymptotic_models_shapes():
    rep = classify_end(catalog_build("rotational", a=2.0), 0j)
    model = asymptotic_model(rep)
    assert np.allclose(model.G.num.coeffs, [0, 2])
    rep_p = classify_end(catalog_build("paraboloid", b=0.5), 0j)
    model_p = asymptotic_model(rep_p)
    assert np.allclose(model_p.G.num.coeffs, [0.5])


def test_decay_canonical_ends():
    # the canonical surfaces coincide with their own models up to constants,
    # so the aligned deviation sits at the numerical floor
    for eid, typ in (("rotational", TYPE_R), ("paraboloid", TYPE_P), ("nonrotational", TYPE_NR)):
        data = catalog_build(eid)
        rep = classify_end(data, 0j)
        assert rep.asym_type == typ
        dev = asymptotic_deviation(data, 0j)
        assert dev[1e-3] < 1e-2
        assert dev[1e-1] >= 10 * dev[1e-3] or dev[1e-3] < 1e-9


def test_decay_fournoid_ends():
    data = catalog_build("fournoid")
    for p in data.domain.ends():
        dev = asymptotic_deviation(data, p)
        assert dev[1e-2] <= 1e-1
        assert dev[1e-1] >= 10 * dev[1e-3]


def test_decay_three_ended_family():
    data = catalog_build("tc8_803_2")
    for p in data.domain.ends():
        dev = asymptotic_deviation(data, p)
        assert dev[1e-2] <= 1e-1
        assert dev[1e-1] >= 10 * dev[1e-3] or dev[1e-3] < 1e-9


def test_osserman_examples():
    par = osserman_report(catalog_build("paraboloid"))
    assert (par.genus, par.n_ends, par.deg_rho, par.rhs) == (0, 1, 0, 0)
    assert par.equality

    rot = osserman_report(catalog_build("rotational"))
    assert (rot.deg_rho, rot.rhs, rot.equality) == (2, 2, True)

    tc2 = osserman_report(catalog_build("tc2"))
    assert (tc2.deg_rho, tc2.rhs, tc2.equality) == (1, 0, False)


def test_osserman_violation_detected():
    # two alleged ends but rho constant: impossible for a complete front
    data = validate(
        WeierstrassData(
            DomainSpec("sphere", (0j, 5.0 + 0j)), rf((1,), (0, 1)), rf((2,), (0, 1))
        )
    )
    try:
        osserman_report(data)
        assert False, "expected InequalityViolated"
    except InequalityViolated:
        pass


def test_equality_iff_all_ends_embedded_over_catalog():
    from afront.catalog import catalog_list

    for entry in catalog_list():
        data = catalog_build(entry.id)
        ledger = osserman_report(data)
        all_emb = all(classify_end(data, p).embedded for p in data.domain.ends())
        assert ledger.equality == all_emb, entry.id
        assert ledger.deg_rho >= ledger.rhs, entry.id


def test_2n_noid_embedded_and_equality():
    for n, lam, mu in ((2, (1.0, -1.0), (1.0, -1.0)), (3, (0.2, 0.2, -1.0), (-1.0, 0.2, 0.2))):
        data = catalog_build("jorge_meeks_2n", n=n, lam=lam, mu=mu)
        assert len(data.domain.ends()) == 2 * n
        assert all(classify_end(data, p).embedded for p in data.domain.ends())
        ledger = osserman_report(data)
        assert ledger.equality and ledger.deg_rho == 4 * n - 2


def test_end_report_serialization():
    rep = classify_end(catalog_build("rotational"), INF)
    js = rep.to_json()
    assert js["p"] == "inf" and js["type"] == TYPE_R and js["swapped"]
