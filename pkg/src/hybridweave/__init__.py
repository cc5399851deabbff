"""hybridweave: socio-technical network reconstruction for open-source archives.

Parses mailing-list (mbox) and CVS-style version-control archives into a
canonical corpus, detects and resolves quotations between messages, builds
temporal people+artifact network snapshots with metrics and deterministic
layout, models the PEP document workflow, and computes the contingency-table
statistics used in discussion analysis.
"""

__version__ = "0.1.0"
