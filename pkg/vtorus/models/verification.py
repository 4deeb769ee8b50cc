from dataclasses import dataclass, field
from enum import Enum
from typing import List


class CheckStatus(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    EXPERIMENTAL = 'experimental'


@dataclass(frozen=True)
class VerificationRow:
    claim_id: str
    instance: str
    expected: str
    observed: str
    status: CheckStatus

    @classmethod
    def check(cls, claim_id, instance, expected, observed):
        """Row whose status is pass iff expected equals observed"""
        status = CheckStatus.PASS if expected == observed else CheckStatus.FAIL
        return cls(claim_id, instance, str(expected), str(observed), status)

    @classmethod
    def experimental(cls, claim_id, instance, expected, observed):
        return cls(claim_id, instance, str(expected), str(observed), CheckStatus.EXPERIMENTAL)

    @classmethod
    def failure(cls, claim_id, instance, expected, error):
        return cls(claim_id, instance, str(expected), f"error: {error}", CheckStatus.FAIL)

    def to_dict(self):
        return {
            'claim_id': self.claim_id,
            'instance': self.instance,
            'expected': self.expected,
            'observed': self.observed,
            'status': self.status.value,
        }


@dataclass
class VerificationMatrix:
    rows: List[VerificationRow] = field(default_factory=list)

    def add(self, row):
        self.rows.append(row)
        return row

    def extend(self, rows):
        self.rows.extend(rows)

    @property
    def failures(self):
        return [row for row in self.rows if row.status is CheckStatus.FAIL]

    @property
    def passed(self):
        """Experimental rows never fail the run"""
        return not self.failures

    def counts(self):
        counts = {status.value: 0 for status in CheckStatus}
        for row in self.rows:
            counts[row.status.value] += 1
        return counts

    def to_rows(self):
        return [row.to_dict() for row in self.rows]
