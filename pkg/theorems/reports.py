# theorems/reports.py
"""
VerificationReport: the structured record every verifier returns.

    {statement, instance, status, summary, witnesses[], timings}

Witnesses carry the subsets, regularity values and kappa values behind each
claim so a report can be replayed on its own. Timings are measured always
but only serialized on request, keeping default output byte-identical
across runs.
"""

import json
import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

from .models import VerificationRecord, VerificationStatus

logger = logging.getLogger(__name__)

EXIT_CODES = {
    VerificationStatus.PASS: 0,
    VerificationStatus.FAIL: 1,
    VerificationStatus.HYPOTHESIS_UNMET: 4,
}


@dataclass
class VerificationReport:
    statement: str
    instance: str
    status: str = VerificationStatus.PASS
    summary: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == VerificationStatus.PASS

    @property
    def exit_code(self):
        return EXIT_CODES[VerificationStatus(self.status)]

    def add_witness(self, kind, ok=True, **data):
        self.witnesses.append({"kind": kind, "ok": bool(ok), **data})
        if not ok:
            self.fail()

    def fail(self):
        if self.status != VerificationStatus.HYPOTHESIS_UNMET:
            self.status = VerificationStatus.FAIL

    @contextmanager
    def timed(self, stage):
        started = time.perf_counter()
        try:
            yield
        finally:
            self.timings[stage] = round(time.perf_counter() - started, 6)

    def finish(self):
        if not self.passed:
            logger.error("%s failed on %s (%s)", self.statement, self.instance, self.status)
        return self

    def to_dict(self, include_timings=False):
        return {
            "statement": self.statement,
            "instance": self.instance,
            "status": str(self.status),
            "summary": self.summary,
            "witnesses": self.witnesses,
            "timings": dict(self.timings) if include_timings else {},
        }

    def to_json(self, include_timings=False):
        return json.dumps(self.to_dict(include_timings), indent=2, sort_keys=True)

    def save_record(self):
        """Append one VerificationRecord row for this report"""
        return VerificationRecord.objects.create(
            statement=self.statement,
            instance=self.instance[:255],
            status=str(self.status),
            report=self.to_dict(include_timings=True),
        )


def hypothesis_unmet_report(statement, instance, error):
    report = VerificationReport(statement=statement, instance=instance, status=VerificationStatus.HYPOTHESIS_UNMET)
    report.summary["reason"] = str(error)
    return report.finish()
