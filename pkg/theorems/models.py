# theorems/models.py
from django.db import models

from core.models import AppendOnlyModel


class VerificationStatus(models.TextChoices):
    """Outcome of one verification run"""
    PASS = 'pass', 'Pass'
    FAIL = 'fail', 'Fail'
    HYPOTHESIS_UNMET = 'hypothesis-unmet', 'Hypothesis Unmet'


class VerificationRecord(AppendOnlyModel):
    """
    One persisted VerificationReport.

    The full JSON report is kept so a failure can be replayed from the row
    alone; statement, instance and status are copied out for filtering.
    """
    statement = models.CharField(max_length=50, db_index=True)
    instance = models.CharField(max_length=255)
    status = models.CharField(max_length=20, choices=VerificationStatus.choices, db_index=True)
    report = models.JSONField()

    class Meta(AppendOnlyModel.Meta):
        verbose_name = 'Verification Record'
        verbose_name_plural = 'Verification Records'
        db_table = 'verification_records'

    def __str__(self):
        return f"{self.statement} on {self.instance}: {self.status}"
