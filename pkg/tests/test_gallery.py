import json

import pytest

from elabcat import gallery as gal
from elabcat.errors import CapExceeded, InputFormatError

FAST_ENTRIES = ["affine-3", "affine-4", "affine-8", "cyclic-3", "gl3-2",
                "prop10-2-1", "triangular-2-3"]


class TestSmallField:
    def test_f4_arithmetic(self):
        F = gal.SmallField(4)
        # t * t = t + 1 under t^2 + t + 1
        t = F.code([0, 1])
        assert F.mul(t, t) == F.add(t, 1)
        assert F.mul(t, F.mul(t, t)) == 1

    def test_f8_multiplicative_order(self):
        F = gal.SmallField(8)
        g = F.primitive()
        x, seen = 1, set()
        for _ in range(7):
            x = F.mul(x, g)
            seen.add(x)
        assert len(seen) == 7

    def test_prime_field(self):
        F = gal.SmallField(5)
        assert F.mul(3, 4) == 2
        assert F.add(3, 4) == 2

    def test_unknown_field_order(self):
        with pytest.raises(ValueError):
            gal.SmallField(32)
        with pytest.raises(ValueError):
            gal.SmallField(6)

    def test_modulus_text(self):
        assert gal.modulus_text(4) == "t^2 + t + 1"
        assert gal.modulus_text(27) == "t^3 + 2t + 1"


class TestBuilders:
    def test_affine_orders(self):
        assert gal.affine_group(3).order == 6
        assert gal.affine_group(4).order == 12
        assert gal.affine_group(8).order == 56

    def test_affine_kernel_is_translations(self):
        b = gal.build_affine(4)
        assert b.kernel.rank == 2
        for i in b.kernel.elements:
            perm = b.group.element(i)
            # translations have no fixed points except the identity
            assert perm == tuple(range(4)) or all(perm[x] != x
                                                  for x in range(4))

    def test_cyclic(self):
        G = gal.cyclic_group(6)
        assert G.order == 6
        b = gal.build_cyclic(6, 3)
        assert b.kernel.rank == 1

    def test_gl3_orders(self):
        assert gal.gl3(2).order == 168
        b = gal.build_gl3(2)
        assert b.e1.rank == 2 and b.e2.rank == 2

    def test_triangular(self):
        b = gal.build_triangular(2, 3)
        assert b.group.order == 32
        assert len(b.q_matrices) == 4
        assert len(b.u_matrices) == 8
        assert b.kernel.rank == 3

    def test_prop10_small(self):
        b = gal.build_prop10(2, 1)
        assert b.group.order == 1024
        assert b.linear_order == 32
        assert b.distinguished.rank == 2
        assert len(b.max_subspaces) == 3
        assert b.c_matrix == ((1, 0), (1, 1))

    def test_prop10_refuses_before_closure(self):
        # predicted order blows the element cap, so the builder must
        # refuse quickly instead of enumerating
        with pytest.raises(CapExceeded) as e:
            gal.build_prop10(3, 1)
        assert e.value.guard == "element_cap"


class TestFixtures:
    def test_entry_names_cover_bundle(self):
        names = gal.entry_names()
        assert set(FAST_ENTRIES) <= set(names)
        assert "gl3-3" in names

    def test_load_entry_unknown(self):
        with pytest.raises(InputFormatError):
            gal.load_entry("no-such-entry")

    def test_load_entry_fields(self):
        entry = gal.load_entry("affine-4")
        assert entry.prime == 2
        assert entry.builder == "affine"
        assert all(c.provenance in ("cited", "derived", "trivial")
                   for c in entry.claims)

    def test_bad_fixture_rejected(self, tmp_path):
        doc = {"name": "x", "builder": "affine", "params": {"q": 4},
               "prime": 2,
               "claims": [{"id": "a", "text": "t", "provenance": "guessed",
                           "check": "group_order", "expected": 1}]}
        path = tmp_path / "x.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(InputFormatError):
            gal.load_entry(str(path))

    def test_unknown_check_rejected(self, tmp_path):
        doc = {"name": "x", "builder": "affine", "params": {"q": 4},
               "prime": 2,
               "claims": [{"id": "a", "text": "t", "provenance": "derived",
                           "check": "not_a_check", "expected": 1}]}
        path = tmp_path / "x.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(InputFormatError):
            gal.load_entry(str(path))

    @pytest.mark.parametrize("name", FAST_ENTRIES)
    def test_verify_entry(self, name):
        report = gal.verify_gallery(gal.load_entry(name))
        failed = [r.claim_id for r in report.results if not r.ok]
        assert report.ok, f"failed claims: {failed}"

    @pytest.mark.slow
    def test_verify_gl3_3(self):
        report = gal.verify_gallery(gal.load_entry("gl3-3"))
        failed = [r.claim_id for r in report.results if not r.ok]
        assert report.ok, f"failed claims: {failed}"

    def test_failing_claim_reported(self, tmp_path):
        doc = {"name": "x", "builder": "affine", "params": {"q": 4},
               "prime": 2,
               "claims": [{"id": "wrong", "text": "off by one",
                           "provenance": "derived", "check": "group_order",
                           "expected": 13}]}
        path = tmp_path / "x.json"
        path.write_text(json.dumps(doc))
        report = gal.verify_gallery(gal.load_entry(str(path)))
        assert not report.ok
        assert report.results[0].computed == 12
