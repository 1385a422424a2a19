"""Expert-finding research information system.

Ingests a researcher roster and publication corpus, derives research
areas from three provenance sources, and serves ranked expert search
over its own inverted-index engine.
"""

__version__ = "0.1.0"
