import unittest

from core.errors import CapacityError
from core.framework import ArgumentationFramework
from enumeration.corpus import CorpusSpec, FixedCorpus
from enumeration.isomorphism import canonical_form
from principles.checker import (
    HOLDS,
    VIOLATED,
    PrincipleId,
    check,
    expected_principles,
    find_counterexample,
    parse_principle,
    profile,
    replay,
    search,
)
from tests.fixtures import F1, F3, F5, F6, F7


class TestPrincipleChecks(unittest.TestCase):
    """Per-framework verdicts with their witnesses."""

    def assertViolated(self, af, spec, principle):
        verdict = check(af, spec, principle)
        self.assertEqual(verdict.outcome, VIOLATED)
        self.assertTrue(replay(verdict))
        return verdict.witness

    def test_undisputed_is_not_admissible(self):
        witness = self.assertViolated(F5, "ud", PrincipleId.ADMISSIBILITY)
        self.assertEqual(witness.get("E"), F5.mask_of("b"))

    def test_i_maximality(self):
        witness = self.assertViolated(F5, "ud", PrincipleId.I_MAXIMALITY)
        self.assertEqual(witness.get("E"), 0)
        self.assertEqual(witness.get("D"), F5.mask_of("b"))

    def test_abstention(self):
        witness = self.assertViolated(F6, "ud", PrincipleId.ABSTENTION)
        self.assertEqual(witness.argument, F6.index_of("a"))

    def test_single_status(self):
        witness = self.assertViolated(F6, "ud", PrincipleId.SINGLE_STATUS)
        self.assertEqual(witness.note, "2 extensions")

    def test_modularization(self):
        """{c} and {b} combine into the conflicting set {b,c}."""
        witness = self.assertViolated(F7, "ud", PrincipleId.MODULARIZATION)
        self.assertEqual(witness.get("E"), F7.mask_of("c"))
        self.assertEqual(witness.get("E'"), F7.mask_of("b"))

    def test_meaningless_reduct(self):
        """The least witness is the empty set, whose reduct is F7 itself."""
        witness = self.assertViolated(F7, "ud", PrincipleId.MEANINGLESS_REDUCT)
        self.assertEqual(witness.get("E"), 0)
        self.assertEqual(witness.get("E'"), F7.mask_of("b"))

    def test_neglection_of_self_attackers(self):
        self.assertViolated(F7, "ud", PrincipleId.NEGLECTION_OF_SELF_ATTACKERS)

    def test_separation(self):
        witness = self.assertViolated(F1, "ud", PrincipleId.SEPARATION_PROPERTY)
        self.assertEqual(witness.get("U"), F1.mask_of("abc"))

    def test_directionality(self):
        witness = self.assertViolated(F5, "vac:adm:cf", PrincipleId.DIRECTIONALITY)
        self.assertEqual(witness.get("U"), 0)

    def test_context_freeness(self):
        witness = self.assertViolated(F1, "ud", PrincipleId.CONTEXT_FREENESS)
        self.assertEqual(witness.get("E"), 0)
        self.assertEqual(witness.get("S"), F1.mask_of("a"))

    def test_existence(self):
        self.assertViolated(F3, "stb", PrincipleId.EXISTENCE)
        self.assertEqual(check(F3, "adm-s2", PrincipleId.EXISTENCE).outcome, HOLDS)

    def test_reinstatement_holds(self):
        verdict = check(F1, "ud", PrincipleId.REINSTATEMENT)
        self.assertEqual(verdict.outcome, HOLDS)
        self.assertFalse(replay(verdict))

    def test_classical_admissible_semantics_hold(self):
        for principle in (PrincipleId.CONFLICT_FREENESS, PrincipleId.ADMISSIBILITY):
            for af in (F1, F3, F5, F6, F7):
                self.assertEqual(check(af, "pr", principle).outcome, HOLDS)

    def test_profile(self):
        verdicts = profile(F5, "ud")
        self.assertEqual([v.principle for v in verdicts], list(PrincipleId))
        self.assertEqual(verdicts[0].outcome, HOLDS)

    def test_verdict_dict(self):
        payload = check(F5, "ud", PrincipleId.ADMISSIBILITY).to_dict()
        self.assertEqual(payload["outcome"], VIOLATED)
        self.assertEqual(payload["semantics"], "ud")
        self.assertEqual(payload["witness"], {"E": ["b"]})
        self.assertEqual(payload["af"], "arg(a).\narg(b).\natt(a,a).\natt(a,b).\n")

    def test_subset_quantifiers_are_bounded(self):
        big = ArgumentationFramework(7)
        with self.assertRaises(CapacityError):
            check(big, "ud", PrincipleId.CONTEXT_FREENESS)

    def test_parse_principle(self):
        self.assertEqual(parse_principle("i-maximality"), PrincipleId.I_MAXIMALITY)
        with self.assertRaises(ValueError):
            parse_principle("maximality")


class TestCounterexampleSearch(unittest.TestCase):
    """Corpus searches stop at the least failing index."""

    def test_first_counterexample_is_f5(self):
        verdict = find_counterexample(CorpusSpec.exhaustive(2), "ud", PrincipleId.ADMISSIBILITY)
        self.assertIsNotNone(verdict)
        self.assertEqual(canonical_form(verdict.af), canonical_form(F5))
        self.assertEqual(verdict.corpus_index, 3)

    def test_report_counts_frameworks_up_to_the_failure(self):
        report = search(CorpusSpec.exhaustive(2), "ud", PrincipleId.ADMISSIBILITY)
        self.assertEqual(report.afs_checked, 4)
        self.assertEqual(report.outcome, VIOLATED)
        self.assertEqual(report.to_dict()["counterexample"]["corpus_index"], 3)

    def test_no_violation_found(self):
        report = search(CorpusSpec.exhaustive(2), "ud", PrincipleId.CONFLICT_FREENESS)
        self.assertEqual(report.outcome, "no-violation-found")
        self.assertEqual(report.afs_checked, 16)
        self.assertIsNone(report.to_dict()["counterexample"])

    def test_expected_principles_hold_on_small_corpora(self):
        """Inherited principles never fail for combinators."""
        for token in ("ud", "adm-s2", "co-s1", "vac:vac:cf:adm:stb"):
            for principle in expected_principles(token):
                with self.subTest(token=token, principle=principle):
                    report = search(CorpusSpec.exhaustive(3, iso_reduce=True), token, principle)
                    self.assertIsNone(report.counterexample)

    def test_expected_principles(self):
        self.assertEqual(set(expected_principles("ud")), {PrincipleId.CONFLICT_FREENESS})
        self.assertEqual(
            set(expected_principles("adm-s2")),
            {PrincipleId.CONFLICT_FREENESS, PrincipleId.ADMISSIBILITY, PrincipleId.EXISTENCE},
        )
        self.assertEqual(expected_principles("pr"), {})

    UNDISPUTED_VIOLATIONS = (
        PrincipleId.ADMISSIBILITY,
        PrincipleId.CONTEXT_FREENESS,
        PrincipleId.MODULARIZATION,
        PrincipleId.MEANINGLESS_REDUCT,
        PrincipleId.SINGLE_STATUS,
        PrincipleId.I_MAXIMALITY,
        PrincipleId.ABSTENTION,
        PrincipleId.NEGLECTION_OF_SELF_ATTACKERS,
        PrincipleId.SEPARATION_PROPERTY,
    )
    UNDISPUTED_HOLDS = (
        PrincipleId.EXISTENCE,
        PrincipleId.CONFLICT_FREENESS,
        PrincipleId.REINSTATEMENT,
        PrincipleId.DIRECTIONALITY,
    )
    UP_TO_THREE = (
        CorpusSpec.exhaustive(1),
        CorpusSpec.exhaustive(2),
        CorpusSpec.exhaustive(3),
    )
    REDUCED_UP_TO_THREE = (
        CorpusSpec.exhaustive(1),
        CorpusSpec.exhaustive(2),
        CorpusSpec.exhaustive(3, iso_reduce=True),
    )

    def test_undisputed_violations_within_three_arguments(self):
        """Each violated principle has a replayable witness on at most three arguments."""
        for principle in self.UNDISPUTED_VIOLATIONS:
            with self.subTest(principle=principle):
                verdict = None
                for corpus in self.UP_TO_THREE:
                    verdict = find_counterexample(corpus, "ud", principle)
                    if verdict is not None:
                        break
                self.assertIsNotNone(verdict)
                self.assertLessEqual(verdict.af.arg_count, 3)
                self.assertTrue(replay(verdict))

    def test_undisputed_satisfied_principles_within_three_arguments(self):
        for principle in self.UNDISPUTED_HOLDS:
            for corpus in self.REDUCED_UP_TO_THREE:
                with self.subTest(principle=principle, corpus=corpus.label):
                    self.assertIsNone(find_counterexample(corpus, "ud", principle))

    def test_classical_directionality_within_three_arguments(self):
        for token in ("adm", "cf", "gr"):
            for corpus in self.REDUCED_UP_TO_THREE:
                with self.subTest(semantics=token, corpus=corpus.label):
                    self.assertIsNone(find_counterexample(corpus, token, PrincipleId.DIRECTIONALITY))

    def test_empty_corpus(self):
        report = search(FixedCorpus.of([]), "ud", PrincipleId.EXISTENCE)
        self.assertEqual(report.afs_checked, 0)
        self.assertIsNone(report.counterexample)


if __name__ == '__main__':
    unittest.main()
