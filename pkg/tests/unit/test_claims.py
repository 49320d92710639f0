import unittest

from claims.registry import (
    BACKWARD,
    CLAIMS,
    Claim,
    ClaimKind,
    Mismatch,
    admissible_ideal_gap,
    find,
    grid_cell,
    ids,
    registry,
    select,
)
from claims.verifier import CONFIRMED, REFUTED, replay, verify, verify_all
from enumeration.corpus import CorpusSpec, FixedCorpus
from enumeration.isomorphism import canonical_form
from semantics.vacuous import vac_extensions
from tests.fixtures import F2, F3, F4, F5

SMALL = CorpusSpec.exhaustive(2)
THREE = CorpusSpec.exhaustive(3, iso_reduce=True)


class TestClaimRegistry(unittest.TestCase):
    """Test cases for the registered claims."""

    def test_grid_is_complete(self):
        grid = [claim for claim in CLAIMS if claim.id.startswith("T1:")]
        self.assertEqual(len(grid), 54)
        self.assertEqual(find("T1:cf:adm").statement, "vac(cf,adm) = ud")
        self.assertEqual(grid_cell("adm", "stb"), "adm-s2")

    def test_ids_are_unique(self):
        self.assertEqual(len(set(ids(registry()))), len(CLAIMS))

    def test_kinds(self):
        self.assertEqual(find("ADM2-EXIST").kind, ClaimKind.NONEMPTY)
        self.assertEqual(find("ORACLE-COG").kind, ClaimKind.ORACLE_MATCH)
        self.assertEqual(find("GR-ADM-IFF").kind, ClaimKind.IFF)

    def test_select(self):
        self.assertEqual(ids(select("T1:adm:")), [f"T1:adm:{c}" for c in ("adm", "gr", "id", "stb", "sst", "cf")])
        self.assertEqual(ids(select("CF-CHAIN")), ["CF-CHAIN"])
        with self.assertRaises(KeyError):
            select("NOPE")
        with self.assertRaises(KeyError):
            select("NOPE:")

    def test_admissible_ideal_gap(self):
        """On F4, {b} is admissible and contains the empty ideal extension, yet is not adm-s1."""
        self.assertIn(F4.mask_of("b"), admissible_ideal_gap(F4))

    def test_conflict_free_stable_on_f3(self):
        """{e} leaves the odd cycle as its reduct, which has no stable extension."""
        self.assertIn(F3.mask_of("e"), vac_extensions(F3, "vac:cf:stb"))

    def test_ideal_of_f4_reduct(self):
        """Removing {b} and its range leaves c and the self-attacking d; the ideal set is {c}."""
        reduct, _ = F4.reduct(F4.mask_of("b"))
        self.assertEqual(reduct.names, ("c", "d"))
        self.assertEqual(vac_extensions(reduct, "id"), (reduct.mask_of("c"),))

    def test_stable_vacuity_on_f3(self):
        """Without stable extensions, adm-s2 keeps every admissible set."""
        self.assertIsNone(find("ADM2-CHARA").evaluate(F3))
        self.assertIn(F3.mask_of("d"), vac_extensions(F3, "adm-s2"))


class TestClaimVerification(unittest.TestCase):
    """Verification runs over small corpora."""

    CONFIRMED_IDS = (
        "T1:adm:adm", "T1:stb:adm", "T1:stb:gr", "T1:stb:id", "T1:stb:stb", "T1:stb:sst", "T1:stb:cf",
        "ORACLE-COG", "ORACLE-UB", "ADM2-EXIST", "ADM2-CHARA", "CO1-CHARA", "GR-ADM-IFF", "GR-SELF",
        "CF-CHAIN", "SST-CF-STB", "EXIST-SUFF", "REINSTATE-SUFF", "CRED-EQ",
    )

    def test_confirmed_on_small_corpora(self):
        for claim_id in self.CONFIRMED_IDS:
            for corpus in (SMALL, THREE):
                with self.subTest(claim=claim_id, corpus=corpus.label):
                    report = verify(find(claim_id), corpus)
                    self.assertEqual(report.outcome, CONFIRMED)
                    self.assertEqual(report.afs_checked, len(list(corpus.indexed())))

    def test_at_most_one_stable_is_not_enough_for_ideal(self):
        """F2 has one stable extension {b}, yet the ideal extension is rejected."""
        report = verify(find("ID-STB-IFF"), FixedCorpus.of([F2], "F2"))
        self.assertEqual(report.outcome, REFUTED)
        self.assertEqual(report.refutation.mismatch.direction, BACKWARD)
        self.assertTrue(replay(report))

        strict = verify(find("ID-STB-STRICT"), FixedCorpus.of([F2], "F2"))
        self.assertEqual(strict.outcome, CONFIRMED)

    def test_false_claim_is_refuted_at_least_index(self):
        false_claim = Claim(
            "UD-IS-PR", ClaimKind.EQUALITY, "vac(cf,adm) = pr", "test",
            lambda af: None if vac_extensions(af, "ud") == vac_extensions(af, "pr")
            else Mismatch("ud differs from pr", vac_extensions(af, "ud"), vac_extensions(af, "pr")),
        )
        report = verify(false_claim, SMALL)
        self.assertEqual(report.outcome, REFUTED)
        self.assertEqual(report.refutation.corpus_index, 3)
        self.assertEqual(report.afs_checked, 4)
        self.assertEqual(canonical_form(report.refutation.af), canonical_form(F5))

        payload = report.to_dict()
        self.assertEqual(payload["refutation"]["left"], [[], ["b"]])
        self.assertEqual(payload["refutation"]["right"], [[]])
        self.assertNotIn("wall_time", payload)
        self.assertIn("wall_time", report.to_dict(timings=True))

    def test_empty_corpus_confirms_vacuously(self):
        report = verify(find("GR-SELF"), FixedCorpus.of([], "empty"))
        self.assertEqual(report.afs_checked, 0)
        self.assertEqual(report.outcome, CONFIRMED)

    def test_whole_registry_up_to_three_arguments(self):
        """Only ID-STB-IFF fails, and it fails once three arguments are available."""
        corpora = [CorpusSpec.exhaustive(1), SMALL, THREE]
        summary = verify_all(corpora)
        self.assertEqual(len(summary.reports), 3 * len(CLAIMS))
        for report in summary.reports:
            with self.subTest(claim=report.claim_id, corpus=report.corpus):
                if report.claim_id == "ID-STB-IFF" and report.corpus == THREE.label:
                    self.assertEqual(report.outcome, REFUTED)
                    self.assertTrue(replay(report))
                elif report.claim_id != "ID-STB-IFF":
                    self.assertEqual(report.outcome, CONFIRMED)

    def test_isomorphism_reduction_keeps_outcomes(self):
        claims = select("T1:id:") + [find(i) for i in ("ID-STB-IFF", "ID-STB-STRICT", "GR-STB-IFF", "ADM2-CHARA")]
        full = verify_all([CorpusSpec.exhaustive(3)], claims)
        reduced = verify_all([THREE], claims)
        self.assertEqual(
            [(r.claim_id, r.outcome) for r in full.reports],
            [(r.claim_id, r.outcome) for r in reduced.reports],
        )

    def test_verify_all(self):
        claims = select("T1:stb:")
        summary = verify_all([SMALL, FixedCorpus.of([F2, F3], "fixtures")], claims)
        self.assertEqual(len(summary.reports), 12)
        self.assertEqual(summary.confirmed, 12)
        self.assertEqual(summary.refuted, 0)
        payload = summary.to_dict()
        self.assertEqual(payload["confirmed"], 12)
        self.assertNotIn("slowest", payload)
        self.assertEqual(len(summary.to_dict(timings=True)["slowest"]), 5)


if __name__ == '__main__':
    unittest.main()
