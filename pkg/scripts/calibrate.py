"""Show the convention choices that were fixed by calibration and why.

Each block tries the alternatives on small cases and prints which one
reproduces the cell engine.
"""
from torushomfly import localization as loc
from torushomfly.catalan import catalan_to_main, hook_formula, spp_full_diagrams
from torushomfly.polyalg import LaurentPoly, aqt
from torushomfly.series import superpoly

ONE = LaurentPoly.one()


def show(title, outcomes):
    print(title)
    for name, ok in outcomes:
        print(f"    {name:40} {'matches' if ok else 'differs'}")


def try_g(n, k, **settings):
    old = {key: getattr(loc, key) for key in settings}
    for key, v in settings.items():
        setattr(loc, key, v)
    try:
        return loc.superpoly_from_g(n, k) == superpoly(n, k).spp
    except loc.ConjectureFailure:
        return False
    finally:
        for key, v in old.items():
            setattr(loc, key, v)


def main():
    S23, S34 = superpoly(2, 3), superpoly(3, 4)
    full = spp_full_diagrams(2, 3) * aqt(q=-S23.mu)
    show("diagram sum prefactor at (2,3)", [
        ("no prefactor (beta = 0 box supplies 1 + a^2 t)", full == S23.spp),
        ("extra global (1 + a^2 t)", full * (ONE + aqt(a=2, t=1)) == S23.spp),
    ])
    for n in (2, 3):
        S = superpoly(n, n + 1)
        h = catalan_to_main(hook_formula(n)) * (ONE + aqt(a=2, t=1)) * aqt(t=S.mu)
        hg = catalan_to_main(hook_formula(n, use_g=True)) * (ONE + aqt(a=2, t=1)) * aqt(t=S.mu)
        show(f"hook formula at n={n}", [("statistics on D(Delta)", h == S.spp),
                                       ("statistics on G(Delta)", hg == S.spp)])
    show("g_{1/n} convention at (3,4), (4,5)", [
        (f"{conv} {nk}", try_g(*nk, G1_CONVENTION=conv))
        for conv in ("coarm", "arm") for nk in ((3, 4), (4, 5))])
    show("(3,1^(n-3)) exponents at (4,7), (5,7), (5,8)", [
        (f"{v} {nk}", try_g(*nk, HOOK3_VARIANT=v))
        for v in ("corrected", "quoted") for nk in ((4, 7), (5, 7), (5, 8))])


if __name__ == "__main__":
    main()
