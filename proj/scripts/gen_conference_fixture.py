#!/usr/bin/env python3
"""Write the bundled conference-domain test track under tests/fixtures/conference.

The seven ontologies and their 21 reference alignments are authored here, not
downloaded. Entity names follow the naming habits of the OAEI Conference
ontologies (cmt camelCase, conference long snake_case phrases, ekaw
Capitalised_Snake, edas verb-led camelCase, ...) so that preprocessing steps
behave on them roughly as they do on the published track. The reference holds
every pair of entities that share a concept row below.

To run the sweep on the real track instead, point OM_CONFERENCE_TRACK at a
MELT-style directory and see tests/fixtures/conference/README.

Usage: python3 scripts/gen_conference_fixture.py
"""

import itertools
import os
import random
from xml.sax.saxutils import quoteattr

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(os.path.dirname(HERE), "tests", "fixtures", "conference")

ONTOLOGIES = ["cmt", "conference", "confOf", "edas", "ekaw", "iasted", "sigkdd"]

# kind | cmt | conference | confOf | edas | ekaw | iasted | sigkdd
# kind: C class, O object property, D datatype property. "-" means absent.
# One row is one concept; cells on a row are equivalent.
CONCEPTS = """
C | Paper | Paper | Paper | Paper | Paper | - | Paper
C | PaperAbstract | Abstract | - | - | Abstract | Abstract | Abstract
C | PaperFullVersion | Regular_contribution | - | - | Regular_Paper | Final_manuscript | Paper_full_version
C | Author | Regular_author | Author | Author | Paper_Author | Author | Author
C | Co-author | Contribution_co-author | - | - | - | - | -
C | Reviewer | Reviewer | - | Reviewer | Possible_Reviewer | Reviewer | Reviewer
C | Review | Review | - | Review | Review | Review | Review
C | Meta-Review | - | - | - | - | - | -
C | Meta-Reviewer | - | - | - | - | - | -
C | ExternalReviewer | - | - | - | - | - | -
C | Conference | Conference | Conference | Conference | Conference | Conference | Conference
C | ConferenceChair | Chair | Chair | ConferenceChair | General_Chair | Conference_chair | General_Chair
C | ConferenceMember | Conference_participant | Participant | ConferenceParticipant | Conference_Participant | Delegate | Conference_participant
C | ProgramCommittee | Program_committee | - | - | PC_Committee | Program_committee | Program_Committee
C | ProgramCommitteeMember | Committee_member | Member_PC | TPCMember | PC_Member | Committee_member | Program_Committee_member
C | ProgramCommitteeChair | Program_committee_chair | Chair_PC | - | PC_Chair | Committee_chair | Program_Committee_Chair
C | Person | Person | Person | Person | Person | Person | Person
C | Document | Conference_document | - | Document | Document | Document | Document
C | Decision | - | - | - | - | - | -
C | Acceptance | - | - | - | - | - | -
C | Rejection | - | - | - | - | - | -
C | SubjectArea | Topic | Topic | Topic | Research_Topic | - | -
C | Preference | - | - | - | - | - | -
C | Bid | - | - | - | - | - | -
C | User | - | - | - | - | - | -
C | Administrator | - | Administrator | - | - | - | -
C | AuthorNotReviewer | - | - | - | - | - | -
C | Chairman | - | - | - | - | - | -
C | - | Accepted_contribution | - | AcceptedPaper | Accepted_Paper | - | -
C | - | Rejected_contribution | - | RejectedPaper | Rejected_Paper | - | -
C | - | Submitted_contribution | Contribution | - | Submitted_Paper | Submission | -
C | - | Camera_ready_contribution | - | - | Camera_Ready_Paper | - | -
C | - | Poster | Poster | - | Poster_Paper | - | -
C | - | Invited_speaker | - | - | Invited_Speaker | - | Invited_Speaker
C | - | Invited_talk | - | - | Invited_Talk | - | -
C | - | Workshop | Workshop | Workshop | Workshop | - | -
C | - | Tutorial | Tutorial | Tutorial | Tutorial | Tutorial | -
C | - | Track | Track | - | Track | - | -
C | - | Organization | Organization | Organization | Organisation | Organization | -
C | - | Organizer | - | - | - | Organizer | Organizator
C | - | Conference_volume | - | - | Proceedings | Proceedings | -
C | - | Important_dates | - | - | - | - | Deadline
C | - | Committee | - | - | - | Committee | Committee
C | - | Organizing_committee | - | - | OC_Committee | Organizing_committee | Organizing_Committee
C | - | Steering_committee | - | - | - | - | Steering_Committee
C | - | Conference_fees | - | - | - | Registration_fee | Registration_fee
C | - | Late_paid_applicant | - | - | - | Late_registration_fee | -
C | - | Early_paid_applicant | - | - | - | Early_registration_fee | -
C | - | Active_conference_participant | - | - | - | Speaker | Speaker
C | - | Passive_conference_participant | - | - | - | Listener | Listener
C | - | - | Student | - | Student | Student | -
C | - | - | University | - | University | University | -
C | - | - | Company | - | - | Company | -
C | - | - | Event | ConferenceEvent | Event | - | -
C | - | - | Social_event | SocialEvent | Social_Event | Social_program | -
C | - | - | Banquet | ConferenceBanquet | Conference_Banquet | Dinner_banquet | -
C | - | - | Trip | Excursion | Excursion | Trip | -
C | - | - | Country | Country | - | - | Nation
C | - | - | City | City | - | City | -
C | - | - | Scholar | Academic | - | - | -
C | - | - | - | Presenter | Presenter | Presenter | Presenter
C | - | - | - | ConferenceSession | Conference_Session | Session | -
C | - | - | - | Attendee | - | Delegate_attendee | -
C | - | - | - | PendingPaper | - | - | -
C | - | - | - | Hotel | - | Hotel | -
C | - | - | - | Sponzorship | - | Sponzorship | Sponzorship
C | - | - | - | - | Industrial_Paper | - | -
C | - | - | - | - | Workshop_Paper | - | -
C | - | - | - | - | Positive_Review | - | -
C | - | - | - | - | Negative_Review | - | -
C | - | - | - | - | Session_Chair | Session_chair | Session_Chair
C | - | - | - | - | - | Sponsor | Sponsor
C | - | - | - | - | - | Award | Award
C | - | - | - | - | - | Best_paper_award | Best_Paper_Awards
C | - | - | - | - | - | Fee | Fee
C | - | - | - | - | - | Webmaster | Webmaster
C | - | - | - | - | - | Lecture | -
C | - | - | - | - | - | Coffee_break | -
C | - | - | - | - | - | - | Author_of_paper_student
O | writePaper | contributes | writes | hasRelatedPaper | authorOf | write | submit
O | hasAuthor | has_authors | writtenBy | isWrittenBy | hasAuthor | is_written_by | -
O | writeReview | - | - | writeReview | writtenReview | write_review | -
O | hasBeenAssigned | - | - | isReviewing | reviewerOfPaper | - | -
O | assignedTo | - | - | hasReviewer | hasReviewer | - | -
O | assignReviewer | - | - | - | - | - | -
O | hasSubjectArea | has_a_track-workshop-tutorial_topic | dealsWith | hasTopic | coversTopic | - | -
O | hasConferenceMember | has_members | hasMember | hasMember | hasMember | - | -
O | memberOfConference | was_a_member_of | isMemberOf | isMemberOf | memberOf | - | -
O | hasDecision | - | - | - | - | - | -
O | acceptPaper | - | - | - | - | - | -
O | rejectPaper | - | - | - | - | - | -
O | readPaper | - | - | readPaper | - | - | -
O | submitPaper | is_submitted_at | - | - | submittedAt | submit_by | -
O | co-writePaper | - | - | - | - | - | -
O | hasCo-author | - | - | - | - | - | -
O | - | has_a_review | - | hasReview | hasReview | - | -
O | - | reviews | reviewes | reviewsPaper | reviewOfPaper | review_of | -
O | - | has_an_abstract | hasAbstract | - | hasAbstract | has_abstract | -
O | - | has_a_program_committee | hasProgramCommittee | - | - | - | -
O | - | belongs_to_reviewers | - | - | - | - | -
O | - | is_the_1th_part_of | - | - | partOf | is_part_of | -
O | - | has_parts | - | - | hasPart | has_part | -
O | - | - | employedBy | worksFor | affiliatedWith | works_at | -
O | - | - | hasAdministrativeEvent | hasEvent | hasEvent | - | -
O | - | - | location | hasLocation | heldIn | held_in | -
O | - | - | hasCountry | hasCountry | - | - | -
O | - | - | hasCity | hasCity | - | - | -
O | - | - | - | attendeeAt | - | attend | -
O | - | - | - | isReviewedBy | - | is_reviewed_by | -
O | - | - | - | hasPresenter | presentedBy | presented_by | presentation
O | - | - | - | - | - | pay | pay
O | - | - | - | - | - | obtain | obtain
O | - | - | - | - | - | is_awarded_by | awarded_by
O | - | - | - | - | scientificallyOrganises | - | -
O | - | - | - | - | technicallyOrganises | - | -
O | - | - | - | - | organises | organizes | design
D | email | has_an_email | hasEmail | hasEmail | - | - | E-mail
D | name | has_a_name | hasName | hasName | - | - | Name
D | - | has_the_first_name | hasFirstName | hasFirstName | - | - | -
D | - | has_the_last_name | hasSurname | hasLastName | - | - | -
D | title | has_a_title | title | hasTitle | - | - | -
D | date | - | - | hasDate | - | - | Date
D | paperID | has_a_paper_id | - | hasPaperId | - | - | -
D | reviewerBiddingStartdate | - | - | - | - | - | -
D | acceptsHardcopySubmissions | - | - | - | - | - | -
D | siteURL | has_a_homepage | hasWeb | hasWebsite | - | - | -
D | maxPapers | - | - | - | - | - | -
D | - | has_a_submission_deadline | hasSubmissionDeadline | hasSubmissionDeadline | - | submission_deadline | Deadline_Paper_Submission
D | - | has_an_abstract_deadline | - | - | - | - | Deadline_Abstract_Submission
D | - | starts_on | starts_on | hasStartDate | startDate | start_date | Start_of_conference
D | - | ends_on | ends_on | hasEndDate | endDate | end_date | End_of_conference
D | - | - | hasPhone | hasPhone | - | phone | -
D | - | - | hasStreet | hasStreet | - | - | -
D | - | - | hasPostalCode | hasZipCode | - | - | -
D | - | - | earlyRegistration | - | - | - | -
D | - | - | - | hasCostAmount | - | price | Price
D | - | - | - | hasCurrency | - | currency | Currency
D | - | - | - | hasRating | - | - | -
D | - | - | - | - | - | - | Award_amount
"""

# Same-ontology names from unrelated concepts whose text sits close to names
# above. They are in no reference.
DISTRACTORS = """
C | - | Reviewed_contribution | - | - | - | - | -
C | - | Paper_reviewing_event | Reviewing_event | ReviewingEvent | Review_Event | - | -
C | - | Conference_contribution | - | - | Contribution | - | -
C | - | Written_contribution | - | - | - | - | -
C | - | Presentation | - | - | - | Presentation | -
O | - | has_a_track | - | - | hasTrack | - | -
D | - | has_a_degree | - | - | - | - | -
D | - | - | - | hasDates | - | - | -
D | - | - | - | - | - | - | Start_of_registration
D | - | - | - | - | - | - | End_of_registration
"""

# Entity counts of the published ontologies. Each ontology is filled up to its
# count with domain terms that have no counterpart elsewhere, dealt from a
# seeded shuffle so that no two ontologies share one.
SIZES = {
    "cmt": 89,
    "conference": 124,
    "confOf": 77,
    "edas": 153,
    "ekaw": 107,
    "iasted": 182,
    "sigkdd": 77,
}

MODIFIERS = """
early late regular student industrial local foreign plenary keynote parallel
evening morning daily extra optional printed electronic final preliminary
external internal senior junior honorary shuttle group single double
""".split()

HEADS = """
registration payment invoice receipt booking room hall building lunch dinner
reception ticket badge certificate schedule agenda slot venue transfer visa
bus taxi flight tour voucher discount refund deposit projector microphone
""".split()


def style(onto, words):
    if onto in ("cmt", "edas"):
        return words[0].capitalize() + "".join(w.capitalize() for w in words[1:])
    if onto in ("ekaw", "sigkdd"):
        return "_".join(w.capitalize() for w in words)
    return "_".join([words[0].capitalize()] + words[1:])


def filler(per_onto):
    rng = random.Random(20241016)
    pool = [[m, h] for m in MODIFIERS for h in HEADS]
    rng.shuffle(pool)
    taken = {n.lower().replace("_", "") for ents in per_onto.values() for _, n in ents}
    for onto in ONTOLOGIES:
        while len(per_onto[onto]) < SIZES[onto]:
            words = pool.pop()
            name = style(onto, words)
            if name.lower().replace("_", "") not in taken:
                per_onto[onto].append(("C", name))


KIND_IRI = {
    "C": "owl:Class",
    "O": "owl:ObjectProperty",
    "D": "owl:DatatypeProperty",
}


def parse(table):
    rows = []
    for line in table.strip().splitlines():
        cells = [c.strip() for c in line.split("|")]
        assert len(cells) == 1 + len(ONTOLOGIES), line
        rows.append((cells[0], {o: n for o, n in zip(ONTOLOGIES, cells[1:]) if n != "-"}))
    return rows


def namespace(onto):
    return "http://" + onto + "#"


def write_ontology(onto, entities):
    lines = [
        '<?xml version="1.0"?>',
        "<rdf:RDF xmlns=" + quoteattr(namespace(onto)),
        '     xml:base=' + quoteattr("http://" + onto),
        '     xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"',
        '     xmlns:owl="http://www.w3.org/2002/07/owl#"',
        '     xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#">',
        "  <owl:Ontology rdf:about=" + quoteattr("http://" + onto) + "/>",
    ]
    for kind, name in entities:
        lines.append("  <" + KIND_IRI[kind] + " rdf:about=" + quoteattr(namespace(onto) + name) + "/>")
    lines.append("</rdf:RDF>")
    with open(os.path.join(OUT, onto + ".owl"), "w", encoding="utf-8") as fp:
        fp.write("\n".join(lines) + "\n")


def write_reference(a, b, cells):
    out = [
        '<?xml version="1.0" encoding="utf-8"?>',
        '<rdf:RDF xmlns="http://knowledgeweb.semanticweb.org/heterogeneity/alignment"',
        '         xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#">',
        "<Alignment>",
        "  <xml>yes</xml>",
        "  <level>0</level>",
        "  <type>11</type>",
        "  <onto1>http://" + a + "</onto1>",
        "  <onto2>http://" + b + "</onto2>",
    ]
    for e1, e2 in cells:
        out += [
            "  <map>",
            "    <Cell>",
            "      <entity1 rdf:resource=" + quoteattr(e1) + "/>",
            "      <entity2 rdf:resource=" + quoteattr(e2) + "/>",
            "      <measure rdf:datatype=\"http://www.w3.org/2001/XMLSchema#float\">1.0</measure>",
            "      <relation>=</relation>",
            "    </Cell>",
            "  </map>",
        ]
    out += ["</Alignment>", "</rdf:RDF>"]
    path = os.path.join(OUT, "reference", a + "-" + b + ".rdf")
    with open(path, "w", encoding="utf-8") as fp:
        fp.write("\n".join(out) + "\n")


MANIFEST_HEAD = """# Conference-domain test track. Pair paths are relative to this file.
track = "conference"
track_root = "."
output_dir = "out"
repair = ["none", "logic"]
jobs = 4

[[pipelines]]
id = "none"
steps = ""

[[pipelines]]
steps = "T"

[[pipelines]]
steps = "T,N"

[[pipelines]]
steps = "T,N,R"

[[pipelines]]
steps = "T,N,R,S:porter"

[[pipelines]]
steps = "T,N,R,S:snowball"

[[pipelines]]
steps = "T,N,R,S:lancaster"
"""


def main():
    concepts = parse(CONCEPTS)
    distractors = parse(DISTRACTORS)
    os.makedirs(os.path.join(OUT, "reference"), exist_ok=True)

    per_onto = {o: [] for o in ONTOLOGIES}
    for kind, names in concepts + distractors:
        for onto, name in names.items():
            per_onto[onto].append((kind, name))
    filler(per_onto)
    for onto, entities in per_onto.items():
        names = [n for _, n in entities]
        dupes = {n for n in names if names.count(n) > 1}
        assert not dupes, (onto, dupes)
        write_ontology(onto, entities)

    manifest = [MANIFEST_HEAD]
    for a, b in itertools.combinations(ONTOLOGIES, 2):
        cells = sorted(
            (namespace(a) + names[a], namespace(b) + names[b])
            for _, names in concepts
            if a in names and b in names
        )
        write_reference(a, b, cells)
        manifest.append(
            "\n[[pairs]]\nid = \"{a}-{b}\"\nsource = \"{a}.owl\"\ntarget = \"{b}.owl\"\n"
            "reference = \"reference/{a}-{b}.rdf\"\n".format(a=a, b=b)
        )
    with open(os.path.join(OUT, "manifest.toml"), "w", encoding="utf-8") as fp:
        fp.write("".join(manifest))


if __name__ == "__main__":
    main()
