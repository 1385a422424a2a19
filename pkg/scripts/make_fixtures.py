#!/usr/bin/env python3
"""Generate the bundled fixture corpus (roster, profile pool, publications,
definitions, sample extracted paper, scripted queries).

Deliberately does NOT import the package: intended classifier labels are
verified with an independent keyword counter so the fixtures stay an
oracle, not an echo of the implementation. Run from the repo root:

    python3 scripts/make_fixtures.py
"""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"

INSTITUTION = "Hochschule Beispielstadt"
DOMAIN = "hs-example.de"

# ---------------------------------------------------------------------------
# Independent tokenizer / keyword counter (mirrors the documented contract,
# implemented from scratch on purpose).
# ---------------------------------------------------------------------------


def simple_tokens(text: str) -> list[str]:
    tokens: list[str] = []
    current: list[str] = []
    for ch in text.lower():
        if ch.isalnum() or ch == "-":
            current.append(ch)
        else:
            if current:
                tokens.append("".join(current))
                current = []
    if current:
        tokens.append("".join(current))
    out = []
    for tok in tokens:
        tok = tok.strip("-")
        if len(tok) >= 2:
            out.append(tok)
    return out


def count_phrase(hay: list[str], phrase: str) -> int:
    needle = simple_tokens(phrase)
    if not needle or len(needle) > len(hay):
        return 0
    hits = 0
    for i in range(len(hay) - len(needle) + 1):
        if hay[i : i + len(needle)] == needle:
            hits += 1
    return hits


def expected_labels(title: str, body: str, taxonomy: list[dict]) -> dict[str, float]:
    """Top-3 labels with confidence >= 0.15, per the classifier contract."""
    title_tokens = simple_tokens(title)
    body_tokens = simple_tokens(body)
    scored: list[tuple[float, str]] = []
    for entry in taxonomy:
        raw = 0
        for keyword in entry["keywords"]:
            raw += count_phrase(title_tokens, keyword) * 3
            raw += count_phrase(body_tokens, keyword)
        if raw > 0:
            confidence = raw / (raw + 10.0)
            if confidence >= 0.15:
                scored.append((confidence, entry["label"]))
    scored.sort(key=lambda item: (-item[0], item[1].lower()))
    return {label: conf for conf, label in scored[:3]}


# ---------------------------------------------------------------------------
# Roster (12 researchers; the optional areas column carries the areas listed
# on the institution website).
# ---------------------------------------------------------------------------

ROSTER = [
    ("Prof. Dr. Lena Hoffmann", "Computer Science", "hoffmann@hs-example.de", "+49 621 292-0101",
     "Big Data;Data Science;Information Retrieval;Software Engineering"),
    ("Prof. Dr. Markus Quandt", "Computer Science", "quandt@hs-example.de", "+49 621 292-0102",
     "Databases;Distributed Systems"),
    ("Prof. Dr.-Ing. Sofia Petridou", "Information Technology", "petridou@hs-example.de", "+49 621 292-0103",
     "Machine Learning;Natural Language Processing"),
    ("Prof. Dr. Katrin Weber", "Biotechnology", "weber@hs-example.de", "+49 621 292-0104",
     "Bioinformatics;Microbiology"),
    ("Prof. Dr. Jörg Müller", "Mechanical Engineering", "mueller@hs-example.de", "+49 621 292-0105",
     "Robotics;Control Engineering"),
    ("Prof. Dr. Anna Schneider", "Electrical Engineering", "schneider@hs-example.de", "+49 621 292-0106",
     "Embedded Systems"),
    ("Prof. Dr. Thomas Becker", "Computer Science", "becker@hs-example.de", "+49 621 292-0107",
     "Information Security;Computer Networks"),
    ("Prof. Dr. Claudia Fischer", "Design", "fischer@hs-example.de", "+49 621 292-0108",
     "Human-Computer Interaction"),
    ("Prof. Dr. Peter Wagner", "Mathematics", "wagner@hs-example.de", "+49 621 292-0109",
     "Statistics;Optimization"),
    ("Prof. Dr. Ingrid Bauer", "Chemical Engineering", "bauer@hs-example.de", "+49 621 292-0110",
     "Materials Science;Renewable Energy"),
    ("Prof. Dr. Ravi Subramanian", "Computer Science", "subramanian@hs-example.de", "+49 621 292-0111",
     "Theory of Computation"),
    ("Prof. Dr. Elena Rossi", "Biotechnology", "rossi@hs-example.de", "+49 621 292-0112",
     "Biotechnology"),
]

# ---------------------------------------------------------------------------
# Scholar profile pool. Hand-labeled outcomes at threshold 0.7:
#   accept: Hoffmann 1.0, Quandt 0.9, Petridou 1.0, Weber 0.7 (needs review)
#   reject: Müller 0.6 (name only), Wagner 0.6 (homonym, wrong institution),
#           everyone else has no candidates.
# ---------------------------------------------------------------------------

PROFILES = [
    {
        "display_name": "Lena Hoffmann",
        "affiliation": "Hochschule Beispielstadt, Fakultät für Informatik",
        "verified_email_domain": "hs-example.de",
        "stated_areas": ["Big Data", "Software Engineering", "Information Retrieval"],
        "citation_counts_by_year": {"2019": 45, "2020": 61, "2021": 88, "2022": 112, "2023": 140},
        "publication_refs": [
            {"title": "Scalable Big Data Processing Pipelines", "year": 2021},
            {"title": "Relevance Ranking with an Inverted Index", "year": 2020},
            {"title": "Design Patterns for Big Data Systems", "year": 2022},
        ],
        "co_authors": ["Sofia Petridou", "David Brenner"],
    },
    {
        "display_name": "Lena Hoffmann",
        "affiliation": "Fernuniversität Westtal",
        "verified_email_domain": "",
        "stated_areas": ["Marketing"],
        "citation_counts_by_year": {"2021": 8, "2022": 12},
        "publication_refs": [{"title": "Brand Perception Online", "year": 2021}],
        "co_authors": [],
    },
    {
        "display_name": "Markus Quandt",
        "affiliation": "Hochschule Beispielstadt",
        "verified_email_domain": "",
        "stated_areas": ["Databases", "Distributed Systems", "Data Engineering"],
        "citation_counts_by_year": {"2018": 30, "2019": 38, "2020": 52, "2021": 70},
        "publication_refs": [
            {"title": "Query Optimization in Modern Database Engines", "year": 2021},
            {"title": "Consensus Protocols for Replicated State Machines", "year": 2020},
        ],
        "co_authors": ["Nina Kraus"],
    },
    {
        "display_name": "Sofia Petridou",
        "affiliation": "Technische Universität Otherstadt",
        "verified_email_domain": "hs-example.de",
        "stated_areas": ["Machine Learning", "Natural Language Processing", "Text Mining"],
        "citation_counts_by_year": {"2020": 25, "2021": 44, "2022": 75, "2023": 102},
        "publication_refs": [
            {"title": "Deep Learning for Text Classification", "year": 2022},
            {"title": "Language Models for German Academic Text", "year": 2023},
        ],
        "co_authors": ["Lena Hoffmann"],
    },
    {
        "display_name": "K. Weber",
        "affiliation": "Institut für Biotechnologie, Hochschule Beispielstadt",
        "verified_email_domain": "hs-example.de",
        "stated_areas": ["Bioinformatics", "Genome Analysis"],
        "citation_counts_by_year": {"2019": 18, "2020": 27, "2021": 35, "2022": 51},
        "publication_refs": [
            {"title": "Sequence Alignment at Scale", "year": 2020},
        ],
        "co_authors": ["Elena Rossi"],
    },
    {
        "display_name": "Joerg Mueller",
        "affiliation": "Universität Andersstadt",
        "verified_email_domain": "",
        "stated_areas": ["Robotics"],
        "citation_counts_by_year": {"2018": 12, "2019": 15},
        "publication_refs": [{"title": "Grasp Planning Revisited", "year": 2018}],
        "co_authors": [],
    },
    {
        "display_name": "Peter Wagner",
        "affiliation": "Universität Nordberg",
        "verified_email_domain": "uni-nordberg.de",
        "stated_areas": ["Number Theory"],
        "citation_counts_by_year": {"2017": 40, "2018": 44},
        "publication_refs": [{"title": "Prime Gaps in Short Intervals", "year": 2017}],
        "co_authors": [],
    },
]

MATCH_LABELS = {
    "Prof. Dr. Lena Hoffmann": {"accepted": True, "score": 1.0, "profile_index": 0},
    "Prof. Dr. Markus Quandt": {"accepted": True, "score": 0.9, "profile_index": 2},
    "Prof. Dr.-Ing. Sofia Petridou": {"accepted": True, "score": 1.0, "profile_index": 3},
    "Prof. Dr. Katrin Weber": {"accepted": True, "score": 0.7, "profile_index": 4},
    "Prof. Dr. Jörg Müller": {"accepted": False, "score": 0.6},
    "Prof. Dr. Anna Schneider": {"accepted": False, "score": 0.0},
    "Prof. Dr. Thomas Becker": {"accepted": False, "score": 0.0},
    "Prof. Dr. Claudia Fischer": {"accepted": False, "score": 0.0},
    "Prof. Dr. Peter Wagner": {"accepted": False, "score": 0.6},
    "Prof. Dr. Ingrid Bauer": {"accepted": False, "score": 0.0},
    "Prof. Dr. Ravi Subramanian": {"accepted": False, "score": 0.0},
    "Prof. Dr. Elena Rossi": {"accepted": False, "score": 0.0},
}

# ---------------------------------------------------------------------------
# Publications. owner ids follow roster order (r-001 .. r-012).
# `labels` records the intended classifier outcome and is asserted below.
# ---------------------------------------------------------------------------


def pub(owner: str, title: str, year: int, body: str | None, labels: set[str], url: str | None = None,
        authors: list[str] | None = None) -> dict:
    return {
        "owner_id": owner,
        "title": title,
        "year": year,
        "body": body,
        "labels": labels,
        "url": url,
        "authors": authors or [],
    }


PUBLICATIONS = [
    # --- r-001 Lena Hoffmann ------------------------------------------------
    pub(
        "r-001",
        "Scalable Big Data Processing Pipelines",
        2021,
        "Institutions accumulate big data at a pace that overwhelms manual curation. "
        "We present a pipeline architecture that moves big data batches from a data lake "
        "through staged hadoop jobs and a compact mapreduce layer. "
        "Throughput measurements show that big data workloads keep their latency budget "
        "even when the cluster is shared. We close with operational guidance for big data teams.",
        {"Big Data"},
        url="https://pubs.example.org/hoffmann/pipelines",
        authors=["Lena Hoffmann", "David Brenner"],
    ),
    pub(
        "r-001",
        "Relevance Ranking with an Inverted Index",
        2020,
        "We describe an information retrieval engine built around an inverted index. "
        "The search engine scores fielded documents and supports relevance ranking tuned "
        "for scholarly text. Experiments compare our information retrieval quality against "
        "a baseline search engine and report gains on navigational queries. "
        "An appendix lists the inverted index layout in detail.\n"
        "Contact: hoffmann@hs-example.de or see https://ir.example.org/engine for material.\n"
        "References\n"
        "[1] A classic textbook on information retrieval.\n"
        "[2] Engine internals report.",
        {"Information Retrieval"},
        authors=["Lena Hoffmann"],
    ),
    pub(
        "r-001",
        "Agile Code Review Practice in Industry",
        2019,
        "Software engineering teams adopt agile methods at different speeds. "
        "Our field study follows code review sessions across four companies and relates "
        "software development habits to defect rates. The results inform software engineering "
        "curricula and suggest lightweight code review checklists.",
        {"Software Engineering"},
        authors=["Lena Hoffmann", "Mia Sorge"],
    ),
    pub(
        "r-001",
        "Neural Correlates of Code Comprehension",
        2023,
        "In a joint project with a psychology group we study cognitive neuroscience methods "
        "applied to program understanding. Participants read code while brain imaging and eeg "
        "signals were recorded. The observed neural correlates separate novice and expert "
        "readers, a finding that cognitive neuroscience research on reading predicts. "
        "We discuss how brain imaging protocols transfer to studies of software work. "
        "The eeg montage is documented for replication.",
        {"Cognitive Neuroscience"},
        url="https://pubs.example.org/hoffmann/neural",
        authors=["Lena Hoffmann", "Theresa Falk"],
    ),
    pub(
        "r-001",
        "Design Patterns for Big Data Systems",
        2022,
        "Recurring design decisions in big data platforms can be framed as design patterns. "
        "We catalogue twelve design patterns, each documented with context and trade-offs, "
        "and map every architectural pattern to failure modes observed in production big data "
        "installations.",
        {"Big Data", "Software Design Patterns"},
        authors=["Lena Hoffmann"],
    ),
    pub(
        "r-001",
        "Teaching Object-Oriented Programming with Inheritance Games",
        2018,
        "We teach object-oriented design with a card game about inheritance hierarchies. "
        "Students model polymorphism and encapsulation rules before writing any code, and "
        "later transfer the object-oriented vocabulary to refactoring exercises.",
        {"Object-Oriented Programming"},
        authors=["Lena Hoffmann", "Mia Sorge"],
    ),
    pub(
        "r-001",
        "Expert Finding for Institutional Research Corpora",
        2022,
        "Finding domain experts inside one institution is an information retrieval task over "
        "a small, noisy corpus. We combine a search engine over publication text with profile "
        "signals and evaluate expert rankings for thirty information retrieval queries. "
        "The study documents where a plain search engine fails and an aggregation layer helps.",
        {"Information Retrieval"},
        url="https://pubs.example.org/joint/expertfinding",
        authors=["Lena Hoffmann", "Sofia Petridou"],
    ),
    # --- r-002 Markus Quandt --------------------------------------------------
    pub(
        "r-002",
        "Query Optimization in Modern Database Engines",
        2021,
        "Cost-based query optimization remains the core of every database engine. "
        "We survey how a modern database plans joins, how databases cache statistics, and "
        "how adaptive query optimization reacts to estimation errors during transaction "
        "processing.",
        {"Databases", "Optimization"},
        authors=["Markus Quandt", "Nina Kraus"],
    ),
    pub(
        "r-002",
        "Snapshot Isolation for Mixed Workloads",
        2019,
        "Transaction processing under snapshot isolation behaves differently for analytic "
        "and operational load. We benchmark a database under mixed workloads and show how "
        "databases avoid write skew with bounded staleness.",
        {"Databases"},
        authors=["Markus Quandt"],
    ),
    pub(
        "r-002",
        "Consensus Protocols for Replicated State Machines",
        2020,
        "A replicated distributed system must agree on an operation order. We compare one "
        "consensus protocol family under partition, measure fault tolerance margins, and "
        "derive deployment rules for every distributed system that spans data centres.",
        {"Distributed Systems"},
        url="https://pubs.example.org/quandt/consensus",
        authors=["Markus Quandt"],
    ),
    pub(
        "r-002",
        "Fault Tolerance Budgets in Distributed Systems",
        2018,
        "We model fault tolerance budgets for distributed systems with heterogeneous nodes "
        "and validate the model against traces of a production distributed system.",
        {"Distributed Systems"},
        authors=["Markus Quandt", "Nina Kraus"],
    ),
    pub("r-002", "A Survey of Database Sharding", 2017, None, {"Databases"},
        authors=["Markus Quandt"]),
    # --- r-003 Sofia Petridou --------------------------------------------------
    pub(
        "r-003",
        "Deep Learning for Text Classification",
        2022,
        "We train a deep learning stack for multilingual text classification. A compact "
        "neural network outperforms a wide one at equal parameter count, and machine learning "
        "practitioners can reuse the recipe: the machine learning pipeline, tokenisation, and "
        "evaluation splits are released.",
        {"Machine Learning"},
        url="https://pubs.example.org/petridou/textcls",
        authors=["Sofia Petridou"],
    ),
    pub(
        "r-003",
        "Language Models for German Academic Text",
        2023,
        "Academic German mixes natural language with English terminology. We adapt a language "
        "model to this register, analyse text mining quality on dissertations, and publish a "
        "natural language benchmark with graded relevance labels.",
        {"Natural Language Processing"},
        authors=["Sofia Petridou", "Lena Hoffmann"],
    ),
    pub(
        "r-003",
        "Maschinelles Lernen in der Praxis",
        2021,
        "Der Beitrag fasst zusammen, wie kleine und mittlere Unternehmen in der Region mit "
        "deep learning Projekte umsetzen. Wir beschreiben, welche Daten die Firmen sammeln, "
        "wie ein deep learning Modell gewartet wird und welche Fehler in der Praxis auftreten. "
        "Die Ergebnisse stammen aus zwölf Interviews und einer Umfrage unter Entwicklern.",
        {"Machine Learning"},
        authors=["Sofia Petridou"],
    ),
    # Duplicate of the joint paper, listed under the co-author with a noisy title.
    pub(
        "r-003",
        "Expert  finding for institutional research corpora!",
        2022,
        None,
        None,  # duplicate record: merged into the primary doc, never classified alone
        authors=["Sofia Petridou", "Lena Hoffmann"],
    ),
    # --- r-004 Katrin Weber --------------------------------------------------
    pub(
        "r-004",
        "Sequence Alignment at Scale",
        2020,
        "Bioinformatics workloads grow with every sequencing run. We parallelise sequence "
        "alignment across commodity nodes and keep genome analysis reproducible with "
        "content-addressed intermediate files. The bioinformatics pipeline is available "
        "as a container image.",
        {"Bioinformatics"},
        url="https://pubs.example.org/weber/alignment",
        authors=["Katrin Weber"],
    ),
    pub(
        "r-004",
        "Gene Expression Profiles of Soil Bacteria",
        2021,
        "We catalogue gene expression responses of soil bacteria under drought stress. "
        "The microbial community shifts composition, and bacteria with dormant phenotypes "
        "dominate. Gene expression clusters align with known microbial stress pathways.",
        {"Bioinformatics", "Microbiology"},
        authors=["Katrin Weber", "Elena Rossi"],
    ),
    pub(
        "r-004",
        "Antibiotic Resistance in Hospital Wastewater",
        2022,
        "Monitoring antibiotic resistance in wastewater gives an early warning signal. "
        "Our microbiology protocol samples hospital effluent weekly; resistant bacteria "
        "counts correlate with ward occupancy, and antibiotic resistance genes persist "
        "downstream.",
        {"Microbiology"},
        authors=["Katrin Weber"],
    ),
    pub("r-004", "Genome Analysis Workflows", 2019, None, {"Bioinformatics"},
        authors=["Katrin Weber"]),
    # --- r-005 Jörg Müller --------------------------------------------------
    pub(
        "r-005",
        "Motion Planning for Mobile Robots",
        2020,
        "Motion planning for mobile robots in cluttered halls must balance optimality and "
        "reaction time. We combine sampling-based motion planning with a learned heuristic; "
        "the robots replan at 20 Hz, and robotics benchmarks confirm shorter paths.",
        {"Robotics"},
        url="https://pubs.example.org/mueller/motion",
        authors=["Jörg Müller"],
    ),
    pub(
        "r-005",
        "Regelungstechnik für autonome Systeme",
        2019,
        "Der Aufsatz erklärt, wie ein pid controller für autonome Fahrzeuge ausgelegt wird "
        "und warum feedback control auch bei stark verrauschten Sensoren stabil bleibt. "
        "Wir zeigen Messungen aus dem Labor und diskutieren, welche Parameter die Studierenden "
        "in der Übung selbst bestimmen.",
        {"Control Engineering"},
        authors=["Jörg Müller"],
    ),
    pub("r-005", "Robots in Manufacturing", 2018, None, {"Robotics"},
        authors=["Jörg Müller"]),
    # --- r-006 Anna Schneider --------------------------------------------------
    pub(
        "r-006",
        "Scheduling on Resource-Constrained Controllers",
        2021,
        "Embedded systems with strict deadlines need schedulers that degrade predictably. "
        "We evaluate fixed-priority scheduling on a microcontroller testbed, quantify jitter "
        "for embedded systems under bus contention, and publish traces for replication.",
        {"Embedded Systems"},
        authors=["Anna Schneider"],
    ),
    pub(
        "r-006",
        "Power-Aware Scheduling for Embedded Systems",
        2020,
        "Battery budgets shape embedded systems design. Our scheduler trades deadline slack "
        "for sleep states on the microcontroller and extends field lifetime by a third.",
        {"Embedded Systems"},
        url="https://pubs.example.org/schneider/power",
        authors=["Anna Schneider"],
    ),
    pub("r-006", "Microcontroller Boot Integrity Primer", 2017, None, {"Embedded Systems"},
        authors=["Anna Schneider"]),
    # --- r-007 Thomas Becker --------------------------------------------------
    pub(
        "r-007",
        "Intrusion Detection with Flow Features",
        2021,
        "Network flow features feed an intrusion detection model that runs at the edge. "
        "We compare the intrusion detection quality against payload inspection, measure the "
        "cost of encryption on feature visibility, and document one network protocol corner "
        "case with heavy packet loss.",
        {"Computer Networks", "Information Security"},
        authors=["Thomas Becker"],
    ),
    pub(
        "r-007",
        "Encryption Overhead in Constrained Networks",
        2019,
        "We measure encryption overhead for a lightweight network protocol on constrained "
        "links. Handshake cost dominates; with session resumption the information security "
        "margin is kept while routing stays unchanged and packet loss is tolerated.",
        {"Computer Networks", "Information Security"},
        url="https://pubs.example.org/becker/encryption",
        authors=["Thomas Becker"],
    ),
    pub("r-007", "Cryptography for Network Engineers", 2016, None, {"Information Security"},
        authors=["Thomas Becker"]),
    # --- r-008 Claudia Fischer --------------------------------------------------
    pub(
        "r-008",
        "Usability of Research Search Interfaces",
        2022,
        "We run a usability evaluation of four academic search interfaces. A user study with "
        "24 participants compares task completion; the user interface with a persistent facet "
        "panel wins on usability and perceived control.",
        {"Human-Computer Interaction"},
        url="https://pubs.example.org/fischer/usability",
        authors=["Claudia Fischer"],
    ),
    pub(
        "r-008",
        "Dashboards People Actually Read",
        2020,
        "A longitudinal user study follows how staff read status dashboards. Attention traces "
        "show that a calmer user interface increases usability scores and that alert fatigue "
        "sets in after two weeks.",
        {"Human-Computer Interaction"},
        authors=["Claudia Fischer", "Tim Roth"],
    ),
    # Metadata-only record that legitimately matches no taxonomy entry.
    pub("r-008", "Accessible Forms for Public Services", 2019, None, set(),
        authors=["Claudia Fischer"]),
    # --- r-009 Peter Wagner --------------------------------------------------
    pub(
        "r-009",
        "Hypothesis Testing under Model Misspecification",
        2018,
        "Classical hypothesis testing assumes a correct model. We derive statistical "
        "corrections that keep the error level when the regression model is misspecified, "
        "and verify the statistics on simulated and registry data.",
        {"Statistics"},
        authors=["Peter Wagner"],
    ),
    pub(
        "r-009",
        "Convex Relaxations for Sparse Regression",
        2021,
        "We study convex optimization relaxations for sparse regression. The proposed "
        "optimization scheme matches linear programming bounds on synthetic instances and "
        "improves statistical recovery guarantees under correlated designs.",
        {"Optimization", "Statistics"},
        url="https://pubs.example.org/wagner/convex",
        authors=["Peter Wagner"],
    ),
    pub("r-009", "Metaheuristic Search Strategies", 2019, None, {"Optimization"},
        authors=["Peter Wagner"]),
    # --- r-010 Ingrid Bauer --------------------------------------------------
    pub(
        "r-010",
        "Polymer Composites for Turbine Blades",
        2021,
        "We characterise a polymer composite material for wind turbine blades. Fatigue tests "
        "relate polymer chain length to crack growth; a nanomaterial coating doubles the "
        "inspection interval. Materials science models predict the observed stiffness loss, informing renewable energy certification for turbine fleets.",
        {"Materials Science", "Renewable Energy"},
        authors=["Ingrid Bauer"],
    ),
    pub("r-010", "Photovoltaic Module Ageing", 2018, None, {"Renewable Energy"},
        authors=["Ingrid Bauer"]),
    # --- r-011 Ravi Subramanian --------------------------------------------------
    pub(
        "r-011",
        "Automata Learning for Protocol Models",
        2020,
        "We infer automata from observed protocol traces and bound the query complexity with "
        "arguments from complexity theory. The learned automata expose two liveness bugs; "
        "computability limits of the black-box setting are discussed alongside a turing "
        "machine reduction.",
        {"Theory of Computation"},
        url="https://pubs.example.org/subramanian/automata",
        authors=["Ravi Subramanian"],
    ),
    pub("r-011", "Turing Machine Variants and Complexity Theory", 2015, None,
        {"Theory of Computation"}, authors=["Ravi Subramanian"]),
    # --- r-012 Elena Rossi --------------------------------------------------
    pub(
        "r-012",
        "Bioreactor Monitoring with Soft Sensors",
        2022,
        "A soft sensor estimates biomass in the bioreactor from off-gas data. The approach "
        "keeps fermentation batches inside specification, reduces sampling of the cell "
        "culture, and transfers to a second biotechnology plant without retuning.",
        {"Biotechnology"},
        url="https://pubs.example.org/rossi/bioreactor",
        authors=["Elena Rossi"],
    ),
    pub("r-012", "Fermentation Process Recipes", 2019, None, {"Biotechnology"},
        authors=["Elena Rossi"]),
]

DEFINITIONS = {
    "big data": {
        "summary": "Big data denotes data sets whose volume, velocity, and variety exceed the capacities of conventional data-processing tools, requiring distributed storage and computation.",
        "source_url": "https://encyclopedia.example.org/wiki/Big_data",
    },
    "information retrieval": {
        "summary": "Information retrieval is the discipline of finding material of an unstructured nature that satisfies an information need from within large collections.",
        "source_url": "https://encyclopedia.example.org/wiki/Information_retrieval",
    },
    "machine learning": {
        "summary": "Machine learning studies algorithms that improve automatically through experience, building models from sample data to make predictions or decisions.",
        "source_url": "https://encyclopedia.example.org/wiki/Machine_learning",
    },
    "databases": {
        "summary": "A database is an organized collection of data managed by a database management system that supports storage, querying, and transactional updates.",
        "source_url": "https://encyclopedia.example.org/wiki/Database",
    },
    "robotics": {
        "summary": "Robotics is the interdisciplinary field concerned with the design, construction, operation, and use of robots.",
        "source_url": "https://encyclopedia.example.org/wiki/Robotics",
    },
    "software engineering": {
        "summary": "Software engineering is the systematic application of engineering approaches to the development, operation, and maintenance of software.",
        "source_url": "https://encyclopedia.example.org/wiki/Software_engineering",
    },
    "bioinformatics": {
        "summary": "Bioinformatics develops methods and software tools for understanding biological data, combining biology, computer science, and statistics.",
        "source_url": "https://encyclopedia.example.org/wiki/Bioinformatics",
    },
    "embedded systems": {
        "summary": "An embedded system is a computer system with a dedicated function within a larger mechanical or electronic system, often with real-time constraints.",
        "source_url": "https://encyclopedia.example.org/wiki/Embedded_system",
    },
}

QUERIES = [
    "big data",
    "information retrieval",
    "machine learning",
    "software engineering",
    "databases",
    "distributed systems",
    "natural language processing",
    "bioinformatics",
    "robotics",
    "embedded systems",
    "intrusion detection",
    "human-computer interaction",
    "statistics",
    "optimization",
    "renewable energy",
    "theory of computation",
    "cognitive neuroscience",
    "design patterns",
    "zzzznotaterm",
    "regelungstechnik",
]

PAPER_BODY = """Expert Search in Practice

Abstract. This note describes a compact expert search prototype. The first
section, as all early References to prior prototypes show, motivates the
setting; later sections document the pipeline.

1 Motivation

Institutions publish faculty lists, yet the listed expertise ages quickly.
An automated pipeline keeps profiles current by reading what people write,
not what they once registered. The prototype described here follows that
route and favours transparent heuristics over tuned models.

2 Pipeline

The pipeline parses a roster, collects publication records, and cleans the
extracted text. Cleaning removes boilerplate, mail addresses, and web
addresses, because indexing them would leak contact data into search
results and distort token statistics.

3 Observations

Rankings stay stable across re-runs, and reviewers accepted the profile
pages after spot checks. Remaining noise concentrates in documents whose
extraction produced ragged line breaks."""

PAPER_REFERENCES = """References
[1] A. Author. Prototype pipelines for campus search. 2019.
[2] B. Writer. Cleaning extracted text. 2021.
[3] C. Coder. Roster formats in the wild. 2020."""


def build_roster() -> None:
    path = FIXTURES / "roster.csv"
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["name", "department", "email", "phone", "institution", "areas"])
        for name, department, email, phone, areas in ROSTER:
            writer.writerow([name, department, email, phone, INSTITUTION, areas])
    print(f"wrote {path}")


def build_profiles() -> None:
    path = FIXTURES / "profiles.json"
    path.write_text(json.dumps(PROFILES, ensure_ascii=False, indent=2) + "\n", "utf-8")
    print(f"wrote {path}")
    labels_path = FIXTURES / "match_labels.json"
    labels_path.write_text(json.dumps(MATCH_LABELS, ensure_ascii=False, indent=2) + "\n", "utf-8")
    print(f"wrote {labels_path}")


def build_publications(taxonomy: list[dict]) -> None:
    path = FIXTURES / "publications.jsonl"
    lines = []
    failures = []
    for record in PUBLICATIONS:
        body = record["body"]
        # The intended labels are checked on the text as it will be indexed:
        # the constructed bodies contain no reference tails or addresses
        # except the one designed case, whose clean form is the text up to
        # the contact line.
        clean = body or ""
        if "References" in clean:
            clean = clean.split("\nContact:", 1)[0]
        got = set(expected_labels(record["title"], clean, taxonomy))
        if record["labels"] is not None and got != record["labels"]:
            failures.append(f"{record['title']}: intended {sorted(record['labels'])}, counter got {sorted(got)}")
        payload = {
            "owner_id": record["owner_id"],
            "title": record["title"],
            "authors": record["authors"],
            "year": record["year"],
        }
        if record["url"]:
            payload["source_url"] = record["url"]
        if body is not None:
            payload["body_text"] = body
        lines.append(json.dumps(payload, ensure_ascii=False))
    if failures:
        sys.exit("intended classifier labels not reproduced:\n  " + "\n  ".join(failures))
    path.write_text("\n".join(lines) + "\n", "utf-8")
    print(f"wrote {path} ({len(lines)} records)")


def build_definitions() -> None:
    path = FIXTURES / "definitions.json"
    path.write_text(json.dumps(DEFINITIONS, ensure_ascii=False, indent=2) + "\n", "utf-8")
    print(f"wrote {path}")


def build_paper_sample() -> None:
    raw = PAPER_BODY + "\n\n" + PAPER_REFERENCES + "\n"
    (FIXTURES / "paper_sample.txt").write_text(raw, "utf-8")
    (FIXTURES / "paper_sample_clean.txt").write_text(PAPER_BODY.rstrip(), "utf-8")
    print("wrote paper_sample.txt / paper_sample_clean.txt")


def build_queries() -> None:
    path = FIXTURES / "queries.json"
    path.write_text(json.dumps(QUERIES, ensure_ascii=False, indent=2) + "\n", "utf-8")
    print(f"wrote {path}")


def check_merge_example(taxonomy: list[dict]) -> None:
    """The designated researcher must end up with exactly seven areas."""
    website = {"big data", "data science", "information retrieval", "software engineering"}
    scholar = {"big data", "software engineering", "information retrieval"}
    classified: set[str] = set()
    for record in PUBLICATIONS:
        if record["owner_id"] == "r-001" or "Lena Hoffmann" in record["authors"]:
            if record["owner_id"] in ("r-001",):
                classified |= {label.lower() for label in record["labels"]}
    merged = website | scholar | classified
    if len(merged) != 7:
        sys.exit(f"designated researcher merges to {sorted(merged)} ({len(merged)} labels, want 7)")
    print(f"designated researcher merges to 7 areas: {sorted(merged)}")


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)
    taxonomy = json.loads((ROOT / "src/expertsearch/data/taxonomy.json").read_text("utf-8"))
    seen_titles = set()
    duplicates = 0
    for record in PUBLICATIONS:
        key = " ".join(simple_tokens(record["title"])) + f"|{record['year']}"
        if key in seen_titles:
            duplicates += 1
        seen_titles.add(key)
    print(f"{len(PUBLICATIONS)} records, {len(seen_titles)} unique, {duplicates} duplicate(s)")
    if len(seen_titles) != 40:
        sys.exit(f"fixture must hold exactly 40 unique publications, has {len(seen_titles)}")
    build_roster()
    build_profiles()
    build_publications(taxonomy)
    build_definitions()
    build_paper_sample()
    build_queries()
    check_merge_example(taxonomy)


if __name__ == "__main__":
    main()
