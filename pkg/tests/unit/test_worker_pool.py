import unittest
from functools import partial

from claims.registry import find
from claims.verifier import verify, verify_all
from enumeration.corpus import CorpusSpec
from principles.checker import PrincipleId, search
from semantics.vacuous import vac_extensions
from utils.worker_pool import WorkerPool


def _has_self_attacker(af):
    return af.relation if af.self_attackers() else None


def _keyed(key, af):
    if key == "loops":
        return _has_self_attacker(af)
    if key == "full":
        # every pair attacks on three arguments
        return af.relation if af.relation == 511 else None
    return None


class TestWorkerPool(unittest.TestCase):
    """Results do not depend on the number of workers."""

    def setUp(self):
        """Set up a small corpus split into several chunks."""
        self.corpus = CorpusSpec.exhaustive(3)
        self.serial = WorkerPool(1, chunk_size=64)
        self.parallel = WorkerPool(2, chunk_size=64)

    def test_invalid_sizes(self):
        with self.assertRaises(ValueError):
            WorkerPool(0)
        with self.assertRaises(ValueError):
            WorkerPool(1, chunk_size=0)

    def test_first_failure_is_least_index(self):
        """The first framework with a self-attacker has relation 1."""
        for pool in (self.serial, self.parallel):
            outcome = pool.first_failure(self.corpus, _has_self_attacker)
            self.assertTrue(outcome.failed)
            self.assertEqual(outcome.failure_index, 1)
            self.assertEqual(outcome.checked, 2)
            self.assertEqual(outcome.payload, 1)

    def test_no_failure_checks_everything(self):
        progress = []
        outcome = self.serial.first_failure(CorpusSpec.exhaustive(2), lambda af: None, progress.append)
        self.assertFalse(outcome.failed)
        self.assertEqual(outcome.checked, 16)
        self.assertEqual(progress, [16])

    def test_search_matches_across_workers(self):
        serial = search(self.corpus, "ud", PrincipleId.MODULARIZATION, self.serial)
        parallel = search(self.corpus, "ud", PrincipleId.MODULARIZATION, self.parallel)
        self.assertEqual(serial.to_dict(), parallel.to_dict())

    def test_verify_matches_across_workers(self):
        serial = verify(find("ID-STB-IFF"), self.corpus, self.serial)
        parallel = verify(find("ID-STB-IFF"), self.corpus, self.parallel)
        self.assertEqual(serial.to_dict(), parallel.to_dict())

    def test_first_failures_match_single_key_searches(self):
        """Each key gets the outcome a search for that key alone would give."""
        keys = ["loops", "full", "never"]
        for pool in (self.serial, self.parallel):
            outcomes = pool.first_failures(self.corpus, _keyed, keys)
            self.assertEqual(set(outcomes), set(keys))
            for key in keys:
                single = self.serial.first_failure(self.corpus, partial(_keyed, key))
                self.assertEqual(outcomes[key], single)
        outcomes = self.serial.first_failures(self.corpus, _keyed, keys)
        self.assertEqual(outcomes["full"].failure_index, 511)
        self.assertEqual(outcomes["never"].checked, 512)

    def test_verify_all_matches_one_claim_at_a_time(self):
        claims = [find("ID-STB-IFF"), find("T1:cf:adm"), find("GR-SELF")]
        for pool in (self.serial, self.parallel):
            summary = verify_all([self.corpus], claims, pool)
            singles = [verify(claim, self.corpus).to_dict() for claim in claims]
            self.assertEqual([report.to_dict() for report in summary.reports], singles)

    def test_map_keeps_index_order(self):
        function = partial(vac_extensions, spec="ud")
        serial = self.serial.map(self.corpus, function)
        parallel = self.parallel.map(self.corpus, function)
        self.assertEqual(serial, parallel)
        self.assertEqual([index for index, _ in serial], list(range(512)))


if __name__ == '__main__':
    unittest.main()
