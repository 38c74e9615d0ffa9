#!/usr/bin/env python3
"""Regenerate the linguistic data files shipped under src/surveykw/data/.

The tag lexicon is produced from a hand-curated base vocabulary (closed-class
words, common open-class bases, contractions, punctuation, abbreviations)
expanded by regular English inflection. Whenever an inflection needs consonant
doubling or another non-recoverable spelling change, a matching lemmatizer
exception entry is emitted so the detachment rules stay simple.

Run from the repository root:  python tools/build_resources.py
"""

from __future__ import annotations

from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "surveykw" / "data"

VOWELS = "aeiou"

# ---------------------------------------------------------------------------
# Closed-class words (word -> Penn tag)
# ---------------------------------------------------------------------------

FUNCTION_WORDS = {
    # determiners / predeterminers
    "the": "DT", "a": "DT", "an": "DT", "this": "DT", "these": "DT",
    "those": "DT", "each": "DT", "every": "DT", "either": "DT",
    "neither": "DT", "some": "DT", "any": "DT", "no": "DT", "all": "DT",
    "both": "DT", "another": "DT", "such": "PDT",
    # pronouns
    "i": "PRP", "you": "PRP", "he": "PRP", "she": "PRP", "it": "PRP",
    "we": "PRP", "they": "PRP", "me": "PRP", "him": "PRP", "us": "PRP",
    "them": "PRP", "myself": "PRP", "yourself": "PRP", "himself": "PRP",
    "herself": "PRP", "itself": "PRP", "ourselves": "PRP",
    "yourselves": "PRP", "themselves": "PRP", "oneself": "PRP",
    "mine": "PRP", "yours": "PRP", "hers": "PRP", "ours": "PRP",
    "theirs": "PRP", "everyone": "NN", "everybody": "NN", "everything": "NN",
    "someone": "NN", "somebody": "NN", "something": "NN", "anyone": "NN",
    "anybody": "NN", "anything": "NN", "nobody": "NN", "nothing": "NN",
    "my": "PRP$", "your": "PRP$", "his": "PRP$", "her": "PRP$",
    "its": "PRP$", "our": "PRP$", "their": "PRP$",
    # prepositions / subordinators
    "of": "IN", "in": "IN", "for": "IN", "on": "IN", "with": "IN",
    "at": "IN", "by": "IN", "from": "IN", "about": "IN", "into": "IN",
    "over": "IN", "after": "IN", "under": "IN", "between": "IN",
    "through": "IN", "during": "IN", "before": "IN", "against": "IN",
    "among": "IN", "without": "IN", "within": "IN", "along": "IN",
    "across": "IN", "behind": "IN", "beyond": "IN", "near": "IN",
    "since": "IN", "until": "IN", "unless": "IN", "although": "IN",
    "though": "IN", "while": "IN", "whilst": "IN", "whereas": "IN",
    "if": "IN", "because": "IN", "whether": "IN", "per": "IN", "via": "IN",
    "toward": "IN", "towards": "IN", "upon": "IN", "despite": "IN",
    "except": "IN", "beneath": "IN", "beside": "IN", "besides": "IN",
    "underneath": "IN", "throughout": "IN", "onto": "IN", "amid": "IN",
    "regarding": "IN", "concerning": "IN", "that": "IN", "than": "IN",
    "as": "IN", "like": "IN", "unlike": "IN", "worth": "IN",
    "to": "TO",
    # coordinators
    "and": "CC", "or": "CC", "but": "CC", "nor": "CC",
    # modals
    "can": "MD", "could": "MD", "will": "MD", "would": "MD", "shall": "MD",
    "should": "MD", "may": "MD", "might": "MD", "must": "MD",
    "cannot": "MD", "ought": "MD",
    # existential
    "there": "EX",
    # adverbs (closed-ish, non -ly)
    "not": "RB", "never": "RB", "very": "RB", "too": "RB", "also": "RB",
    "just": "RB", "still": "RB", "only": "RB", "quite": "RB",
    "rather": "RB", "almost": "RB", "always": "RB", "often": "RB",
    "sometimes": "RB", "already": "RB", "even": "RB", "again": "RB",
    "once": "RB", "twice": "RB", "here": "RB", "now": "RB", "then": "RB",
    "soon": "RB", "yet": "RB", "ago": "RB", "perhaps": "RB", "maybe": "RB",
    "however": "RB", "thus": "RB", "therefore": "RB", "instead": "RB",
    "anyway": "RB", "moreover": "RB", "meanwhile": "RB",
    "nevertheless": "RB", "nonetheless": "RB", "otherwise": "RB",
    "indeed": "RB", "furthermore": "RB", "anywhere": "RB",
    "everywhere": "RB", "nowhere": "RB", "somewhere": "RB", "somehow": "RB",
    "somewhat": "RB", "else": "RB", "ever": "RB", "far": "RB", "away": "RB",
    "back": "RB", "well": "RB", "further": "RB", "rarely": "RB",
    "seldom": "RB", "so": "RB", "up": "RB", "down": "RB", "out": "RB",
    "off": "RB", "around": "RB", "abroad": "RB", "overseas": "RB",
    "upstairs": "RB", "downstairs": "RB", "forward": "RB", "backwards": "RB",
    "ahead": "RB", "apart": "RB", "aside": "RB", "altogether": "RB",
    "anymore": "RB", "elsewhere": "RB", "halfway": "RB", "together": "RB",
    "enough": "RB", "much": "RB", "alone": "RB", "quickly": "RB",
    # wh-words
    "which": "WDT", "whatever": "WDT", "who": "WP", "whom": "WP",
    "what": "WP", "whoever": "WP", "whomever": "WP", "whose": "WP$",
    "when": "WRB", "where": "WRB", "why": "WRB", "how": "WRB",
    "whenever": "WRB", "wherever": "WRB",
    # interjections
    "yes": "UH", "oh": "UH", "okay": "UH", "ok": "UH", "hello": "UH",
    "hi": "UH", "wow": "UH", "hey": "UH", "please": "UH",
    # cardinal numbers written out
    "zero": "CD", "one": "CD", "two": "CD", "three": "CD", "four": "CD",
    "five": "CD", "six": "CD", "seven": "CD", "eight": "CD", "nine": "CD",
    "ten": "CD", "eleven": "CD", "twelve": "CD", "thirteen": "CD",
    "fourteen": "CD", "fifteen": "CD", "sixteen": "CD", "seventeen": "CD",
    "eighteen": "CD", "nineteen": "CD", "twenty": "CD", "thirty": "CD",
    "forty": "CD", "fifty": "CD", "sixty": "CD", "seventy": "CD",
    "eighty": "CD", "ninety": "CD", "hundred": "CD", "thousand": "CD",
    "million": "CD", "billion": "CD",
    # ordinals
    "first": "JJ", "second": "JJ", "third": "JJ", "fourth": "JJ",
    "fifth": "JJ", "sixth": "JJ", "seventh": "JJ", "eighth": "JJ",
    "ninth": "JJ", "tenth": "JJ",
    # graded quantifiers
    "more": "JJR", "most": "JJS", "less": "JJR", "least": "JJS",
    "few": "JJ", "fewer": "JJR", "fewest": "JJS", "many": "JJ",
    "several": "JJ", "own": "JJ", "same": "JJ", "other": "JJ",
    "whole": "JJ", "certain": "JJ", "half": "NN",
}

CONTRACTIONS = {
    "i'm": "PRP", "i've": "PRP", "i'd": "PRP", "i'll": "PRP",
    "you're": "PRP", "you've": "PRP", "you'd": "PRP", "you'll": "PRP",
    "he's": "PRP", "he'd": "PRP", "he'll": "PRP",
    "she's": "PRP", "she'd": "PRP", "she'll": "PRP",
    "it's": "PRP", "it'll": "PRP",
    "we're": "PRP", "we've": "PRP", "we'd": "PRP", "we'll": "PRP",
    "they're": "PRP", "they've": "PRP", "they'd": "PRP", "they'll": "PRP",
    "that's": "DT", "there's": "EX", "here's": "RB", "what's": "WP",
    "who's": "WP", "let's": "VB",
    "don't": "VBP", "doesn't": "VBZ", "didn't": "VBD", "won't": "MD",
    "wouldn't": "MD", "can't": "MD", "couldn't": "MD", "shouldn't": "MD",
    "mustn't": "MD", "mightn't": "MD", "shan't": "MD", "needn't": "MD",
    "isn't": "VBZ", "aren't": "VBP", "wasn't": "VBD", "weren't": "VBD",
    "hasn't": "VBZ", "haven't": "VBP", "hadn't": "VBD", "ain't": "VBP",
}

PUNCTUATION = {
    ".": ".", "!": ".", "?": ".",
    ",": ",",
    ":": ":", ";": ":", "...": ":", "-": ":", "--": ":",
    "–": ":", "—": ":",
    "(": "-LRB-", "[": "-LRB-", "{": "-LRB-",
    ")": "-RRB-", "]": "-RRB-", "}": "-RRB-",
    '"': "''", "'": "''", "''": "''", "`": "``", "``": "``",
    "‘": "``", "’": "''", "“": "``", "”": "''",
    "$": "$", "£": "$", "€": "$",
    "#": "#",
    "%": "SYM", "+": "SYM", "=": "SYM", "*": "SYM", "/": "SYM",
    "\\": "SYM", "^": "SYM", "|": "SYM", "~": "SYM", "<": "SYM",
    ">": "SYM", "@": "SYM", "&": "SYM", "•": "SYM",
}

ABBREVIATIONS = {
    "e.g.": "FW", "i.e.": "FW", "etc.": "FW", "vs.": "IN",
    "mr.": "NNP", "mrs.": "NNP", "ms.": "NNP", "dr.": "NNP",
    "prof.": "NNP", "inc.": "NNP", "ltd.": "NNP", "co.": "NNP",
    "corp.": "NNP", "dept.": "NN", "approx.": "RB", "a.m.": "RB",
    "p.m.": "RB", "u.s.": "NNP", "u.k.": "NNP", "ph.d.": "NN",
}

# ---------------------------------------------------------------------------
# Verbs
# ---------------------------------------------------------------------------

# base -> (past, past participle); 3sg and gerund are generated
IRREGULAR_VERBS = {
    "arise": ("arose", "arisen"), "awake": ("awoke", "awoken"),
    "bear": ("bore", "borne"), "beat": ("beat", "beaten"),
    "become": ("became", "become"), "begin": ("began", "begun"),
    "bend": ("bent", "bent"), "bet": ("bet", "bet"),
    "bind": ("bound", "bound"), "bite": ("bit", "bitten"),
    "bleed": ("bled", "bled"), "blow": ("blew", "blown"),
    "break": ("broke", "broken"), "breed": ("bred", "bred"),
    "bring": ("brought", "brought"), "build": ("built", "built"),
    "burst": ("burst", "burst"), "buy": ("bought", "bought"),
    "cast": ("cast", "cast"), "catch": ("caught", "caught"),
    "choose": ("chose", "chosen"), "cling": ("clung", "clung"),
    "come": ("came", "come"), "cost": ("cost", "cost"),
    "creep": ("crept", "crept"), "cut": ("cut", "cut"),
    "deal": ("dealt", "dealt"), "dig": ("dug", "dug"),
    "draw": ("drew", "drawn"), "drink": ("drank", "drunk"),
    "drive": ("drove", "driven"), "eat": ("ate", "eaten"),
    "fall": ("fell", "fallen"), "feed": ("fed", "fed"),
    "feel": ("felt", "felt"), "fight": ("fought", "fought"),
    "find": ("found", "found"), "flee": ("fled", "fled"),
    "fly": ("flew", "flown"), "forbid": ("forbade", "forbidden"),
    "forget": ("forgot", "forgotten"), "forgive": ("forgave", "forgiven"),
    "freeze": ("froze", "frozen"), "get": ("got", "gotten"),
    "give": ("gave", "given"), "grow": ("grew", "grown"),
    "hang": ("hung", "hung"), "hear": ("heard", "heard"),
    "hide": ("hid", "hidden"), "hit": ("hit", "hit"),
    "hold": ("held", "held"), "hurt": ("hurt", "hurt"),
    "keep": ("kept", "kept"), "kneel": ("knelt", "knelt"),
    "know": ("knew", "known"), "lay": ("laid", "laid"),
    "lead": ("led", "led"), "leave": ("left", "left"),
    "lend": ("lent", "lent"), "let": ("let", "let"),
    "lie": ("lay", "lain"), "light": ("lit", "lit"),
    "lose": ("lost", "lost"), "make": ("made", "made"),
    "mean": ("meant", "meant"), "meet": ("met", "met"),
    "mistake": ("mistook", "mistaken"), "overcome": ("overcame", "overcome"),
    "pay": ("paid", "paid"), "prove": ("proved", "proven"),
    "put": ("put", "put"), "quit": ("quit", "quit"),
    "read": ("read", "read"), "ride": ("rode", "ridden"),
    "ring": ("rang", "rung"), "rise": ("rose", "risen"),
    "run": ("ran", "run"), "see": ("saw", "seen"),
    "seek": ("sought", "sought"), "sell": ("sold", "sold"),
    "send": ("sent", "sent"), "set": ("set", "set"),
    "shake": ("shook", "shaken"), "shine": ("shone", "shone"),
    "shoot": ("shot", "shot"), "show": ("showed", "shown"),
    "shut": ("shut", "shut"), "sing": ("sang", "sung"),
    "sink": ("sank", "sunk"), "sit": ("sat", "sat"),
    "sleep": ("slept", "slept"), "slide": ("slid", "slid"),
    "speak": ("spoke", "spoken"), "spend": ("spent", "spent"),
    "spin": ("spun", "spun"), "split": ("split", "split"),
    "spread": ("spread", "spread"), "spring": ("sprang", "sprung"),
    "stand": ("stood", "stood"), "steal": ("stole", "stolen"),
    "stick": ("stuck", "stuck"), "sting": ("stung", "stung"),
    "strike": ("struck", "struck"), "strive": ("strove", "striven"),
    "swear": ("swore", "sworn"), "sweep": ("swept", "swept"),
    "swim": ("swam", "swum"), "swing": ("swung", "swung"),
    "take": ("took", "taken"), "teach": ("taught", "taught"),
    "tear": ("tore", "torn"), "tell": ("told", "told"),
    "think": ("thought", "thought"), "throw": ("threw", "thrown"),
    "tread": ("trod", "trodden"), "understand": ("understood", "understood"),
    "undertake": ("undertook", "undertaken"), "wake": ("woke", "woken"),
    "wear": ("wore", "worn"), "weave": ("wove", "woven"),
    "weep": ("wept", "wept"), "win": ("won", "won"),
    "wind": ("wound", "wound"), "withdraw": ("withdrew", "withdrawn"),
    "write": ("wrote", "written"),
}

# fully suppletive paradigms added verbatim
SPECIAL_VERB_FORMS = {
    "be": "VB", "am": "VBP", "is": "VBZ", "are": "VBP", "was": "VBD",
    "were": "VBD", "been": "VBN", "being": "VBG",
    "have": "VBP", "has": "VBZ", "had": "VBD", "having": "VBG",
    "do": "VBP", "does": "VBZ", "did": "VBD", "done": "VBN",
    "doing": "VBG",
    "go": "VB", "goes": "VBZ", "went": "VBD", "gone": "VBN",
    "going": "VBG",
    "say": "VB", "says": "VBZ", "said": "VBD", "saying": "VBG",
}

SPECIAL_VERB_EXC = {
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be", "has": "have", "had": "have",
    "went": "go", "gone": "go", "did": "do", "done": "do", "said": "say",
}

REGULAR_VERBS = """
accept achieve acknowledge act adapt add address adjust admire admit adopt
advise affect afford agree aim allow analyse analyze announce answer
anticipate apologise apologize appear applaud apply appoint appreciate
approach approve argue arrange arrive ask assess assign assist assume
assure attend attract avoid balance base behave believe belong blame boost
borrow bother brush burn calculate cancel care carry cause celebrate
challenge change charge chat check cite claim clean clear click climb
close collaborate collect combine comment communicate commute compare
compete complain complete comply concentrate concern conclude confirm
connect consider consist contact contain continue contribute convince
cook cooperate coordinate copy correct count crash create cross cry
damage dance decide decline decrease dedicate defend define delay
delegate delete deliver demand demonstrate deny depend describe deserve
design destroy determine develop die differ disagree disappear discover
discuss dislike dismiss divide dominate doubt dream dress drop earn
educate elect email embrace emphasise emphasize employ empower enable
encounter encourage engage enhance enjoy ensure enter escalate escape
establish estimate evaluate evolve exceed exchange excite excuse exercise
exist expand expect experiment explain explore express extend face fail
fear feature fill filter finish fit fix focus follow force forecast form
foster fulfil fulfill gain gather generate govern grab grant greet grow
guarantee guess guide handle happen hate heal help hesitate hire hope
host hug hurry identify ignore illustrate imagine implement imply impress
improve include increase inform innovate inspire install intend interact
interest introduce invest investigate invite involve join jump justify
kick kill kiss knock lack land last laugh launch lean learn license lift
like link list listen live locate lock log look love lower maintain
manage mark match matter measure mention mentor merge mind miss mix
motivate move multiply name need note notice obtain occur open operate
order organise organize owe pack paint park participate pass pause
perform persuade phone pick place plan play point praise prefer prepare
present press prevent print proceed produce promise promote protect
provide publish pull purchase push qualify raise reach realise realize
recall receive recognise recognize recommend record recruit reduce refer
reflect refuse regret relate relax release rely remain remember remind
remove rent repair repeat replace reply report represent request require
rescue resign resolve respond rest retain retire return reveal review
rush satisfy save score search secure seem select serve settle shape
share shift shop shout signal smile solve sort sound specify spell spot
 state stay stop stress stretch struggle study submit succeed suffer
suggest supply support suppose surprise surround survive switch tackle
talk taste tend thank thrive touch track trade train transfer transform
translate travel treat try turn understand update upgrade use vary visit
volunteer vote wait walk want warn wash waste watch wave welcome wish
wonder work worry wrap
""".split()

# gerunds with irregular spelling
GERUND_EXC = {"lie": "lying", "die": "dying", "tie": "tying"}

# multi-syllable verbs that double the final consonant
DOUBLE_FINAL = {
    "occur", "prefer", "refer", "commit", "submit", "admit", "permit",
    "regret", "control", "equip", "transfer", "transmit", "omit", "upset",
    "format", "begin", "forget", "excel", "propel", "patrol", "install",
}

# ---------------------------------------------------------------------------
# Nouns
# ---------------------------------------------------------------------------

NOUNS = """
ability access accident account achievement acquisition action activity
address administration advance advantage advice age agenda agreement air
aircraft airline airport ambition amount analysis animal answer apartment
app appointment approach architecture area argument arm army art article
artist aspect assessment asset assistance assistant atmosphere attention
attitude audience audit author authority autonomy  award baby
background bag balance bank barrier base basis battle beach bed behavior
behaviour belief believer benchmark benefit bill bird birthday board boat
body bond bonus book boss bottle boundary box boy brain branch brand
bread breach breakfast bridge budget bug burden bus business cafeteria
cake calendar call camera campaign campus candidate capability capacity
captain car card care career case cash cat category cause ceiling
celebration census centre center ceremony certificate chain chair
challenge champion chance change chapter character charge chart chat
checklist cheque chief child choice church circumstance citizen city
class classroom clause client climate clinic cloud club coach code
coffee colleague collection college colour color combination comfort
command comment commission commitment committee communication community
commute company comparison compensation competence competition
competitor complaint compliance component computer concept concern
conclusion condition conduct conference confidence confidentiality
conflict connection consequence constraint consultant contact content
contest context contract contrast contribution control conversation
cooperation copy core corner corporation cost council counsel country
countryside county couple courage course court cow creativity credit
crew crime crisis criterion crowd culture cup curriculum customer cycle
dad danger data database date daughter day deadline deal debate debt
decade decision dedication defence defense degree demand democracy
demotion department depth design desire desk detail determination
development device dialogue diet difference difficulty dignity dinner
direction director disadvantage discipline disclosure discount
discovery discrimination discussion disease distance distribution
district diversity dividend division doctor document dog dollar domain
door dream dress drink driver duty ear earth economy edge editor
education effect efficiency effort election electricity element email
emergency emotion emphasis employee employer employment empowerment end
energy engagement engine engineer entertainment enthusiasm entry
environment equality equipment equity error estate ethics evaluation
evening event evidence exam examination example excellence exception
exchange excitement excuse executive exercise exit expansion expectation
expense experience expert expertise explanation exposure expression
extent eye face facility fact factor factory failure faith family fan
farm fashion father fault favour favor fear feature fee feedback fibre
fiber field figure file film finance finger fire firm fish fitness
flavour flavor flexibility flight floor flower focus food foot force
forecast forest fork form format fortune foundation founder framework
freedom friend friendship fruit fuel fun function fund furniture future
game gap garden gas gate gender generation gift girl glass goal
god gold golf  government grade graduate grant grass ground group
growth guarantee guard guest guidance guide guideline guy gym habit
hair hall hand happiness harassment hardware harmony hat head headache
headquarters health heart heat height hero hierarchy hill history
holiday home honesty honour honor horse hospital hotel hour house
humour humor hygiene idea  identity illness image imagination
impact importance incentive incident income increase independence index
individual industry influence information infrastructure initiative
injury innovation input insight inspection inspiration instance
institution instruction instrument insurance integration integrity
intelligence intention interaction interest interface internet
interview investment investor invoice island issue item job
journalist journey joy judge judgment juice justice key keyboard kid
kind king kitchen knee knife knowledge lab label laboratory labour
labor lack lake land landscape language laptop launch law lawyer layer
layout leader leadership league legacy leg lesson letter level liberty
library licence license life lifestyle light limit limitation line link
list literature litre liter load loan location lock logic logo
longevity lord loss lot loyalty luck lunch machine machinery
magazine mail maintenance majority mall man management manager mandate
manner manufacturer map margin mark market marriage mastery match
material matter mayor meal measure mechanism medal media medicine
meeting member membership memory mentor menu merger message metal
method methodology metre meter metric midnight migration milestone milk
mind minister ministry minority minute mission mistake mix mixture mode
model moment money monitor month mood moon morale morality mother
motivation motive mountain mouse mouth movement movie music name
nation nature need negotiation neighbour neighbor network news
newspaper night noise noon norm nose note notice notification notion
number nurse nutrition object objective obligation observation obstacle
occasion occupation ocean offence offense offer office officer oil
onboarding operation operator opinion opportunity option order
organisation organization orientation origin outcome output oven
overtime owner ownership oxygen pace package page pain paint painting
pair panel paper parent park parking part participant participation
partner partnership party passion password past path patience patient
pattern pause pay payment payroll peace peak peer penalty pension
percentage perception performance period permission permit person
personality personnel perspective phase philosophy phone photo phrase
piece pilot pipeline place plan plane planet plant plate platform
player pleasure pocket point police policy politician politics pool
population portfolio portion position possibility post potato potential
poverty power practice praise presence present presentation president
press pressure prestige price pride principal principle print priority
privacy privilege prize probability problem procedure proceeding
process producer product production productivity profession professor
profile profit program programme progress project promise promotion
proof property proportion proposal prospect protection protocol
provider province purchase purpose quality quantity quarter queen
query question queue quote race radio rail rain range rank rate ratio
reaction reader reason receipt reception recession recipe recognition
recommendation record recovery recruit recruitment reduction redundancy
reference reform refund region register regulation relation
relationship release relief religion relocation remark reminder rent
repair report reporter reputation request requirement research
reserve resignation resilience resource respect response
responsibility rest restaurant result retention retirement return
revenue review reward rhythm rice rigour rigor risk river road
roadmap role roof room root route routine row rule rumour rumor safety
salary sale sample sanction satisfaction scale scenario schedule
scheme school science scientist scope score screen script sea search
season seat section sector security selection self seminar sense
sentence series server service session settlement severance shape
share shareholder shift ship shirt shock shoe shop  side sign
signal silence site situation size skill sky sleep slide smile snow
society software soil soldier solution son song sort sound source
space speaker specialist species speech speed spirit sport spot spouse
spreadsheet spring staff stability stack staff stage stair stakeholder
standard star state statement station status step stock stomach
stone store storm story strategy street strength stress structure
struggle student studio study stuff style subject subsidiary substance
suburb success suggestion suite sum summer sun supermarket supervisor
supplier supply support surface surgery surplus surprise survey
sustainability symbol synergy system table talent target task taste
tax taxi tea teacher team teamwork technician technique technology
telephone television temperature template tenure term test text
theatre theater theme theory therapy thing thought threshold ticket
tide time timeline tip title toilet tomato tone tool top topic total
tour tourism town track trade tradition traffic train trainee trainer
transaction transfer transition transparency transport travel
treatment tree trend trial trip truck trust truth turnover tutor
type uncertainty understanding uniform union unit university update
upgrade user vacancy vacation value van variety vegetable vehicle
vendor venture venue version victory video view village vision
visitor voice volume vote wage wall war warehouse warranty waste
water way weakness wealth weather web website wedding week weekend
weight welfare wellness west wheel wife will window wine winner winter
wisdom woman wood word work worker workforce workload workplace
workshop world worry worth writer year youth zone
""".split()

# -ing forms whose dominant reading is nominal
ING_NOUNS = """
accounting advertising banking beginning belonging branding
broadcasting building catering clothing coaching computing consulting
counseling counselling earning ending engineering evening feeling
funding gardening hearing housing learning listing living lodging
 marketing meaning meeting mentoring morning mourning
networking nursing offering onboarding opening outsourcing painting
parenting planning positioning pricing publishing reading recycling
restructuring saving scheduling screening setting shopping spelling
spending staffing standing teaching thinking timing trading training
understanding upbringing volunteering warning wedding wellbeing writing
""".split()

PLURAL_ONLY_NOUNS = """
earnings savings belongings surroundings premises proceeds goods clothes
people analytics logistics economics ethics politics headquarters
congratulations thanks outskirts
""".split()

UNCOUNTABLE_NOUNS = {
    "advice", "information", "knowledge", "equipment", "furniture",
    "feedback", "software", "hardware", "electricity", "luggage",
    "baggage", "homework", "machinery", "personnel", "staff", "news",
    "media", "data", "people", "clothing", "wellbeing", "wellness",
    "teamwork", "money", "music", "traffic", "transport", "tourism",
    "weather", "stuff", "harassment", "sustainability", "transparency",
    "morale", "hygiene", "nutrition",
}

# plural -> singular where the detachment rules cannot recover the lemma
IRREGULAR_PLURALS = {
    "men": "man", "women": "woman", "children": "child", "feet": "foot",
    "teeth": "tooth", "geese": "goose", "mice": "mouse", "lice": "louse",
    "oxen": "ox", "wives": "wife", "knives": "knife", "lives": "life",
    "selves": "self", "crises": "crisis", "analyses": "analysis",
    "bases": "basis", "theses": "thesis", "hypotheses": "hypothesis",
    "parentheses": "parenthesis", "diagnoses": "diagnosis",
    "emphases": "emphasis", "oases": "oasis", "criteria": "criterion",
    "phenomena": "phenomenon", "indices": "index",
    "appendices": "appendix", "matrices": "matrix", "vertices": "vertex",
    "alumni": "alumnus", "fungi": "fungus", "nuclei": "nucleus",
    "stimuli": "stimulus", "syllabi": "syllabus",
    "curricula": "curriculum", "memoranda": "memorandum",
    "bacteria": "bacterium", "monies": "money", "personae": "persona",
}

# nouns taking -es after final o
O_ES_PLURALS = {"potato", "tomato", "hero", "echo", "veto"}

# singular f/fe nouns whose plural is -ves (plural listed in lexicon)
F_VES_PLURALS = {
    "wife": "wives", "knife": "knives", "life": "lives", "leaf": "leaves",
    "shelf": "shelves", "wolf": "wolves", "half": "halves",
    "calf": "calves", "loaf": "loaves", "thief": "thieves",
    "self": "selves", "scarf": "scarves",
}

# ---------------------------------------------------------------------------
# Adjectives and adverbs
# ---------------------------------------------------------------------------

ADJECTIVES = """
able absent abstract academic accessible accountable accurate active
actual adaptable additional adequate advanced affordable afraid aged
aggressive agile alive ambitious ample ancient angry annual anxious
appropriate approximate artificial artistic attractive authentic
automatic available average aware bad balanced basic beautiful big
bitter black blue bold brave bright brilliant broad broken brown busy
calm capable careful careless casual cautious central cheap chemical
civil classic classical clean clear clever cold collaborative
collective comfortable commercial common compact competent competitive
complete complex comprehensive confident conscious conservative
considerable consistent constant constructive contemporary content
continuous convenient cool cooperative core corporate correct costly
courteous crazy creative critical crucial cultural curious current
customary cute daily dark dead dear decent dedicated deep definite
delicious democratic dependable desirable difficult digital diligent
direct dirty disabled disappointed distant distinct diverse domestic
dominant double dry due dull dynamic eager early economic economical
educational effective efficient elderly electric electrical electronic
elegant elementary emotional empty energetic enormous enthusiastic
entire environmental equal essential ethical everyday evident exact
excellent exceptional excessive exciting exclusive existing expensive
experienced expert explicit external extra extraordinary extreme fair
faithful false familiar famous fantastic fast fat faulty favourable
favorable favourite favorite feasible federal female final financial
fine firm fiscal fit flat flexible fluent fond foreign formal former
fortunate fragile free frequent fresh friendly front full fundamental
funny gentle genuine glad global golden grand grateful great green grey
gross happy hard harsh healthy heavy helpful high historic historical
holy honest hopeful hot huge human humble hungry hybrid ideal identical
ill illegal immediate immense impatient imperfect important impossible
impressive inadequate inclusive incorrect incredible independent
indirect individual industrial inevitable informal initial innovative
intact intellectual intelligent intense interesting intermediate
internal international invaluable invisible inward joint junior just
keen key kind large late lazy leading lean legal liable light likely
limited liquid little live lively local logical lonely long loose loud
loyal lucky mad main major male manual mature maximum mean meaningful
mechanical medical medium mental messy middle mild minimal minimum
minor mobile moderate modern modest monthly moral motivated multiple
mutual narrow national natural neat necessary negative nervous neutral
new nice noble noisy normal notable nuclear objective obvious odd
offline official old online only open operational optimal optimistic
oral ordinary organic organisational organizational original outdoor
outstanding overall overdue palatable parallel particular passionate
passive patient peaceful perfect permanent personal physical plain
pleasant pleased polite political poor popular positive possible
powerful practical precious precise pregnant premium present
prestigious previous primary prime principal prior private proactive
productive professional proficient profitable prominent prompt proper
proud psychological public punctual pure qualified quick quiet rapid
rare rational raw ready real realistic reasonable recent red regional
regular relative relevant reliable religious remarkable remote
renewable repetitive residential resilient respectful responsible
responsive rich rigid ripe robust rough round routine royal rude rural
sad safe salty satisfactory scarce scientific secondary secure senior
sensible sensitive separate serious severe sharp shiny short shy sick
significant silent silly similar simple sincere single slight slow
small smart smooth social soft solar solid sore sorry sound spacious
spare special specific spicy spiritual stable standard steady steep
sticky stiff straight strange strategic strict strong structural
stunning subtle subject sufficient suitable sunny superb superior
supportive sure sustainable sweet swift systematic tall tangible
technical temporary terrible thick thin thorough thoughtful tight
timely tiny tired top tough toxic traditional transparent tremendous
tropical typical ugly unable uncomfortable underlying unemployed
unexpected unfair unfortunate unhappy unique universal unlikely
unnecessary unpleasant unprofessional unsafe unusual upset urban urgent
useful useless usual vacant vague valid valuable various vast verbal
viable vibrant virtual visible visual vital vivid vocal voluntary
vulnerable warm weak wealthy weekly weird welcome wet white wide wild
willing wise wonderful wooden worthwhile worthy written wrong yellow
young
""".split()

# short adjectives also listed with -er / -est forms
GRADABLE_ADJECTIVES = """
big bright broad busy calm cheap clean clear close cold cool dark deep
dry early easy fair fast fat fine firm flat fresh full great green
happy hard healthy heavy high hot kind large late lazy light long loud
low lucky mild narrow near neat new nice noisy old plain poor proud
quick quiet rare rich rough safe sharp short shy sick simple slow small
smart smooth soft steep sticky strange strict strong sweet tall thick
thin tight tiny tough warm weak wealthy wide wild wise young
""".split()

IRREGULAR_ADJ_FORMS = {
    "better": ("JJR", "good"), "best": ("JJS", "good"),
    "worse": ("JJR", "bad"), "worst": ("JJS", "bad"),
    "farther": ("JJR", "far"), "farthest": ("JJS", "far"),
    "furthest": ("JJS", "far"), "elder": ("JJR", "old"),
    "eldest": ("JJS", "old"),
}

BARE_ADJECTIVES = {"low", "near", "good"}  # graded but not in ADJECTIVES

EXTRA_ADVERBS = {
    "today": "NN", "tomorrow": "NN", "yesterday": "NN", "tonight": "NN",
    "overnight": "RB", "sometime": "RB", "anytime": "RB", "forever": "RB",
    "overall": "JJ", "nearby": "JJ", "alright": "RB",
}

# forced tags, applied last
OVERRIDES = {
    "working": "VBG",
    "being": "VBG",
}

STOPWORDS = """
a about above after again against all am an and any are as at be because
been before being below between both but by can cannot could did do does
doing down during each few for from further had has have having he her
here hers herself him himself his how i if in into is it its itself just
me more most my myself no nor not now of off on once only or other our
ours ourselves out over own same she should so some such than that the
their theirs them themselves then there these they this those through to
too under until up very was we were what when where which while who whom
why will with would you your yours yourself yourselves
i'm i've i'd i'll you're you've you'd you'll he's he'd she's she'd it's
we're we've we'd they're they've that's there's what's who's don't
doesn't didn't won't wouldn't can't couldn't shouldn't isn't aren't
wasn't weren't hasn't haven't hadn't let's
""".split()

# ---------------------------------------------------------------------------
# Inflection helpers
# ---------------------------------------------------------------------------


def is_consonant(ch: str) -> bool:
    return ch.isalpha() and ch not in VOWELS


def doubles_final(base: str) -> bool:
    if base in DOUBLE_FINAL:
        return True
    if len(base) < 3 or len(base) > 4:
        return False
    a, b, c = base[-3], base[-2], base[-1]
    return is_consonant(a) and b in VOWELS and is_consonant(c) and c not in "wxy"


def pluralize(noun: str) -> str | None:
    if noun in UNCOUNTABLE_NOUNS or noun in IRREGULAR_PLURALS.values():
        return None
    if noun in F_VES_PLURALS:
        return F_VES_PLURALS[noun]
    if noun.endswith("y") and len(noun) > 1 and is_consonant(noun[-2]):
        return noun[:-1] + "ies"
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun in O_ES_PLURALS:
        return noun + "es"
    return noun + "s"


def verb_3sg(base: str) -> str:
    if base.endswith("y") and len(base) > 1 and is_consonant(base[-2]):
        return base[:-1] + "ies"
    if base.endswith(("s", "x", "z", "ch", "sh", "o")):
        return base + "es"
    return base + "s"


def verb_gerund(base: str) -> tuple[str, bool]:
    """Return (gerund, doubled) where doubled means an exception is needed."""
    if base in GERUND_EXC:
        return GERUND_EXC[base], True
    if base.endswith("ie"):
        return base[:-2] + "ying", True
    if base.endswith("e") and not base.endswith(("ee", "oe", "ye")):
        return base[:-1] + "ing", False
    if doubles_final(base):
        return base + base[-1] + "ing", True
    return base + "ing", False


def verb_past(base: str) -> tuple[str, bool]:
    if base.endswith("e"):
        return base + "d", False
    if base.endswith("y") and len(base) > 1 and is_consonant(base[-2]):
        return base[:-1] + "ied", False  # recovered by the ied->y rule
    if doubles_final(base):
        return base + base[-1] + "ed", True
    return base + "ed", False


def adj_compare(base: str) -> tuple[str, str, bool]:
    """Return (comparative, superlative, doubled)."""
    if base.endswith("e"):
        return base + "r", base + "st", False
    if base.endswith("y") and len(base) > 1 and is_consonant(base[-2]):
        return base[:-1] + "ier", base[:-1] + "iest", False
    if doubles_final(base):
        c = base[-1]
        return base + c + "er", base + c + "est", True
    return base + "er", base + "est", False


# ---------------------------------------------------------------------------
# Build
# ---------------------------------------------------------------------------


def build() -> None:
    lexicon: dict[str, str] = {}
    noun_exc: dict[str, str] = dict(IRREGULAR_PLURALS)
    verb_exc: dict[str, str] = dict(SPECIAL_VERB_EXC)
    adj_exc: dict[str, str] = {w: b for w, (_, b) in IRREGULAR_ADJ_FORMS.items()}

    def put(word: str, tag: str) -> None:
        lexicon.setdefault(word, tag)

    for source in (PUNCTUATION, ABBREVIATIONS, CONTRACTIONS, FUNCTION_WORDS,
                   SPECIAL_VERB_FORMS, EXTRA_ADVERBS):
        for word, tag in source.items():
            put(word, tag)

    for plural in PLURAL_ONLY_NOUNS:
        put(plural, "NNS")
    for plural, singular in IRREGULAR_PLURALS.items():
        put(plural, "NNS")
        put(singular, "NN")
    for ing in ING_NOUNS:
        put(ing, "NN")

    for noun in NOUNS:
        put(noun, "NN")
        plural = pluralize(noun)
        if plural:
            put(plural, "NNS")
    for ing in ING_NOUNS:
        plural = pluralize(ing) if ing not in UNCOUNTABLE_NOUNS else None
        if plural and ing in {"meeting", "building", "feeling", "warning",
                              "wedding", "painting", "saving", "earning",
                              "morning", "evening", "beginning", "ending",
                              "opening", "offering", "hearing", "listing",
                              "setting", "training"}:
            put(plural, "NNS")

    for adj in ADJECTIVES:
        put(adj, "JJ")
    for word, (tag, _) in IRREGULAR_ADJ_FORMS.items():
        put(word, tag)
    for base in GRADABLE_ADJECTIVES + sorted(BARE_ADJECTIVES):
        put(base, "JJ")
        comp, sup, doubled = adj_compare(base)
        put(comp, "JJR")
        put(sup, "JJS")
        if doubled or (base.endswith("y") and is_consonant(base[-2])):
            adj_exc.setdefault(comp, base)
            adj_exc.setdefault(sup, base)

    all_verbs = sorted(set(REGULAR_VERBS) | set(IRREGULAR_VERBS))
    for base in all_verbs:
        put(base, "VB")
        put(verb_3sg(base), "VBZ")
        gerund, needs_exc = verb_gerund(base)
        put(gerund, "VBG")
        if needs_exc:
            verb_exc.setdefault(gerund, base)
        if base in IRREGULAR_VERBS:
            past, participle = IRREGULAR_VERBS[base]
            put(past, "VBD")
            if participle != past:
                put(participle, "VBN")
            if past != base:
                verb_exc.setdefault(past, base)
            if participle not in (past, base):
                verb_exc.setdefault(participle, base)
        else:
            past, needs_exc = verb_past(base)
            put(past, "VBD")
            if needs_exc:
                verb_exc.setdefault(past, base)

    for word, tag in OVERRIDES.items():
        lexicon[word] = tag

    noun_lemmas = (set(NOUNS) | set(ING_NOUNS) | set(PLURAL_ONLY_NOUNS)
                   | set(IRREGULAR_PLURALS.values())
                   | {w for w, t in EXTRA_ADVERBS.items() if t == "NN"})
    verb_lemmas = set(all_verbs) | {"be", "have", "do", "go", "say"}
    adj_lemmas = (set(ADJECTIVES) | set(GRADABLE_ADJECTIVES)
                  | BARE_ADJECTIVES | {b for _, b in IRREGULAR_ADJ_FORMS.values()})

    detachment_rows = [
        # class, suffix, replacement; order is significant
        ("noun", "'s", ""),
        ("noun", "s'", ""),
        ("noun", "s", ""),
        ("noun", "ses", "s"),
        ("noun", "ves", "f"),
        ("noun", "xes", "x"),
        ("noun", "zes", "z"),
        ("noun", "ches", "ch"),
        ("noun", "shes", "sh"),
        ("noun", "men", "man"),
        ("noun", "ies", "y"),
        ("verb", "s", ""),
        ("verb", "ies", "y"),
        ("verb", "ied", "y"),
        ("verb", "es", "e"),
        ("verb", "es", ""),
        ("verb", "ed", "e"),
        ("verb", "ed", ""),
        ("verb", "ing", "e"),
        ("verb", "ing", ""),
        ("adj", "ier", "y"),
        ("adj", "iest", "y"),
        ("adj", "er", ""),
        ("adj", "est", ""),
        ("adj", "er", "e"),
        ("adj", "est", "e"),
    ]

    DATA_DIR.mkdir(parents=True, exist_ok=True)

    with open(DATA_DIR / "lexicon.tsv", "w", encoding="utf-8") as fh:
        for word in sorted(lexicon):
            fh.write(f"{word}\t{lexicon[word]}\n")

    with open(DATA_DIR / "detachment_rules.tsv", "w", encoding="utf-8") as fh:
        for cls, suffix, repl in detachment_rows:
            fh.write(f"{cls}\t{suffix}\t{repl}\n")

    for name, table in (("noun.exc", noun_exc), ("verb.exc", verb_exc),
                        ("adj.exc", adj_exc)):
        with open(DATA_DIR / name, "w", encoding="utf-8") as fh:
            for word in sorted(table):
                fh.write(f"{word} {table[word]}\n")

    for name, words in (("lemmas_noun.txt", noun_lemmas),
                        ("lemmas_verb.txt", verb_lemmas),
                        ("lemmas_adj.txt", adj_lemmas)):
        with open(DATA_DIR / name, "w", encoding="utf-8") as fh:
            for word in sorted(words):
                fh.write(word + "\n")

    with open(DATA_DIR / "stopwords.txt", "w", encoding="utf-8") as fh:
        for word in sorted(set(STOPWORDS)):
            fh.write(word + "\n")

    print(f"lexicon entries:   {len(lexicon)}")
    print(f"noun exceptions:   {len(noun_exc)}")
    print(f"verb exceptions:   {len(verb_exc)}")
    print(f"adj exceptions:    {len(adj_exc)}")
    print(f"noun lemmas:       {len(noun_lemmas)}")
    print(f"verb lemmas:       {len(verb_lemmas)}")
    print(f"adj lemmas:        {len(adj_lemmas)}")
    print(f"stopwords:         {len(set(STOPWORDS))}")


if __name__ == "__main__":
    build()
