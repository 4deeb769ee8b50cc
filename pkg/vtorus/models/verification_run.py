from datetime import datetime
import json

from vtorus import db


class VerificationRun(db.Model):
    __tablename__ = 'verification_runs'

    id = db.Column(db.Integer, primary_key=True)
    r = db.Column(db.Integer, nullable=False)
    s = db.Column(db.Integer, nullable=False)
    sections = db.Column(db.String(255), nullable=False)  # comma separated section names
    status = db.Column(db.String(20), nullable=False)  # 'pass', 'fail'
    pass_count = db.Column(db.Integer, default=0)
    fail_count = db.Column(db.Integer, default=0)
    experimental_count = db.Column(db.Integer, default=0)
    run_data = db.Column(db.Text)  # JSON with seed, budget and other options
    created_at = db.Column(db.DateTime, default=datetime.utcnow, index=True)

    records = db.relationship(
        'VerificationRecord',
        backref='run',
        cascade='all, delete-orphan',
        order_by='VerificationRecord.position',
    )

    __table_args__ = (
        db.CheckConstraint(status.in_(['pass', 'fail']), name='check_run_status'),
    )

    def __repr__(self):
        return f'<VerificationRun VT({self.r},{self.s}) - {self.status}>'

    def set_run_data(self, data):
        """Set run options as JSON"""
        self.run_data = json.dumps(data) if data else None

    def get_run_data(self):
        """Get run options from JSON"""
        try:
            return json.loads(self.run_data) if self.run_data else {}
        except json.JSONDecodeError:
            return {}

    def to_dict(self, include_records=False):
        data = {
            'id': self.id,
            'r': self.r,
            's': self.s,
            'sections': self.sections.split(',') if self.sections else [],
            'status': self.status,
            'pass': self.pass_count,
            'fail': self.fail_count,
            'experimental': self.experimental_count,
            'options': self.get_run_data(),
            'created_at': self.created_at.isoformat() if self.created_at else None,
        }
        if include_records:
            data['records'] = [record.to_dict() for record in self.records]
        return data

    @staticmethod
    def record_matrix(params, sections, matrix, options=None):
        """Create and save a run with one record per matrix row"""
        counts = matrix.counts()
        run = VerificationRun(
            r=params.r,
            s=params.s,
            sections=','.join(sections),
            status='pass' if matrix.passed else 'fail',
            pass_count=counts['pass'],
            fail_count=counts['fail'],
            experimental_count=counts['experimental'],
        )
        run.set_run_data(options)

        for position, row in enumerate(matrix.rows):
            run.records.append(VerificationRecord(
                position=position,
                claim_id=row.claim_id,
                instance=row.instance,
                expected=row.expected,
                observed=row.observed,
                status=row.status.value,
            ))

        db.session.add(run)
        db.session.commit()

        return run


class VerificationRecord(db.Model):
    __tablename__ = 'verification_records'

    id = db.Column(db.Integer, primary_key=True)
    run_id = db.Column(db.Integer, db.ForeignKey('verification_runs.id'), nullable=False, index=True)
    position = db.Column(db.Integer, nullable=False)
    claim_id = db.Column(db.String(100), nullable=False, index=True)
    instance = db.Column(db.String(100), nullable=False)
    expected = db.Column(db.Text)
    observed = db.Column(db.Text)
    status = db.Column(db.String(20), nullable=False)  # 'pass', 'fail', 'experimental'

    __table_args__ = (
        db.CheckConstraint(status.in_(['pass', 'fail', 'experimental']), name='check_record_status'),
    )

    def __repr__(self):
        return f'<VerificationRecord {self.claim_id} - {self.status}>'

    def to_dict(self):
        return {
            'claim_id': self.claim_id,
            'instance': self.instance,
            'expected': self.expected,
            'observed': self.observed,
            'status': self.status,
        }
