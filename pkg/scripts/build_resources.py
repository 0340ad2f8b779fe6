#!/usr/bin/env python3
"""Build the bundled data resources and the test fixture corpus.

Writes the pronunciation lexicon, the part-of-speech word list, the
onomatopoeia and stopword lists, the instruction template catalog, the
held-out argument list, the stub phrase bank, and a deterministic fixture
corpus of short poems. Rerunning the script reproduces every file byte for
byte, so the generated files are checked in and this script only needs to
run again when the word tables change.

The lexicon uses the cmudict 0.7b format (``WORD  PH1 PH2 ...`` with ``(n)``
variant markers and ``;;;`` comments) so a full cmudict file can be dropped
in as a replacement at runtime.
"""
from __future__ import annotations

import json
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
DATA = ROOT / "src" / "versecraft" / "data"
FIXTURES = ROOT / "tests" / "fixtures"

CORPUS_SEED = 20240811


def d(text: str) -> dict[str, tuple[str, list[str]]]:
    """Parse a word-table block: ``word|POS|phones[|alt phones...]`` per line."""
    table: dict[str, tuple[str, list[str]]] = {}
    for raw in text.strip().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("|")]
        word, pos, prons = parts[0], parts[1], parts[2:]
        if word in table:
            raise SystemExit(f"duplicate word table entry: {word}")
        table[word] = (pos, prons)
    return table


FUNCTION_WORDS = d("""
the|DET|DH AH0|DH IY0
a|DET|AH0|EY1
an|DET|AE1 N
this|DET|DH IH1 S
that|DET|DH AE1 T
these|DET|DH IY1 Z
those|DET|DH OW1 Z
some|DET|S AH1 M
any|DET|EH1 N IY0
each|DET|IY1 CH
every|DET|EH1 V ER0 IY0
no|DET|N OW1
all|DET|AO1 L
more|DET|M AO1 R
few|DET|F Y UW1
my|DET|M AY1
your|DET|Y AO1 R
his|DET|HH IH1 Z
her|DET|HH ER1
its|DET|IH1 T S
our|DET|AW1 ER0
their|DET|DH EH1 R
i|PRON|AY1
you|PRON|Y UW1
he|PRON|HH IY1
she|PRON|SH IY1
it|PRON|IH1 T
we|PRON|W IY1
they|PRON|DH EY1
me|PRON|M IY1
him|PRON|HH IH1 M
them|PRON|DH EH1 M
us|PRON|AH1 S
who|PRON|HH UW1
none|PRON|N AH1 N
mine|PRON|M AY1 N
someone|PRON|S AH1 M W AH2 N
something|PRON|S AH1 M TH IH0 NG
myself|PRON|M AY2 S EH1 L F
nobody|PRON|N OW1 B AA2 D IY0
of|ADP|AH1 V
in|ADP|IH0 N|IH1 N
on|ADP|AA1 N
at|ADP|AE1 T
to|ADP|T UW1
by|ADP|B AY1
for|ADP|F AO1 R
with|ADP|W IH1 DH
from|ADP|F R AH1 M
into|ADP|IH1 N T UW0
upon|ADP|AH0 P AA1 N
over|ADP|OW1 V ER0
under|ADP|AH1 N D ER0
through|ADP|TH R UW1
between|ADP|B IH0 T W IY1 N
against|ADP|AH0 G EH1 N S T
without|ADP|W IH0 TH AW1 T
within|ADP|W IH0 TH IH1 N
beyond|ADP|B IH0 AA1 N D
beneath|ADP|B IH0 N IY1 TH
beside|ADP|B IH0 S AY1 D
toward|ADP|T AH0 W AO1 R D
near|ADP|N IH1 R
like|ADP|L AY1 K
as|ADP|AE1 Z
unto|ADP|AH1 N T UW0
during|ADP|D UH1 R IH0 NG
above|ADP|AH0 B AH1 V
along|ADP|AH0 L AO1 NG
before|ADP|B IH0 F AO1 R
and|OTHER|AH0 N D|AE1 N D
or|OTHER|AO1 R
but|OTHER|B AH1 T
if|OTHER|IH1 F
so|OTHER|S OW1
then|OTHER|DH EH1 N
than|OTHER|DH AE1 N
when|OTHER|W EH1 N
where|OTHER|W EH1 R
while|OTHER|W AY1 L
because|OTHER|B IH0 K AO1 Z
though|OTHER|DH OW1
yet|OTHER|Y EH1 T
not|OTHER|N AA1 T
o|OTHER|OW1
oh|OTHER|OW1
what|OTHER|W AH1 T
is|VERB|IH1 Z
are|VERB|AA1 R
was|VERB|W AA1 Z
were|VERB|W ER1
am|VERB|AE1 M
be|VERB|B IY1
been|VERB|B IH1 N
being|VERB|B IY1 IH0 NG
do|VERB|D UW1
does|VERB|D AH1 Z
did|VERB|D IH1 D
done|VERB|D AH1 N
have|VERB|HH AE1 V
has|VERB|HH AE1 Z
had|VERB|HH AE1 D
will|VERB|W IH1 L
would|VERB|W UH1 D
can|VERB|K AE1 N
could|VERB|K UH1 D
shall|VERB|SH AE1 L
should|VERB|SH UH1 D
may|VERB|M EY1
might|VERB|M AY1 T
must|VERB|M AH1 S T
let|VERB|L EH1 T
now|ADV|N AW1
here|ADV|HH IY1 R
there|ADV|DH EH1 R
never|ADV|N EH1 V ER0
always|ADV|AO1 L W EY2 Z
again|ADV|AH0 G EH1 N
still|ADV|S T IH1 L
once|ADV|W AH1 N S
away|ADV|AH0 W EY1
alone|ADV|AH0 L OW1 N
softly|ADV|S AO1 F T L IY0
gently|ADV|JH EH1 N T L IY0
slowly|ADV|S L OW1 L IY0
quietly|ADV|K W AY1 AH0 T L IY0
forever|ADV|F ER0 EH1 V ER0
maybe|ADV|M EY1 B IY0
only|ADV|OW1 N L IY0
even|ADV|IY1 V IH0 N
just|ADV|JH AH1 S T
too|ADV|T UW1
very|ADV|V EH1 R IY0
how|ADV|HH AW1
why|ADV|W AY1
out|ADV|AW1 T
up|ADV|AH1 P
down|ADV|D AW1 N
soon|ADV|S UW1 N
around|ADV|ER0 AW1 N D
apart|ADV|AH0 P AA1 R T
instead|ADV|IH0 N S T EH1 D
below|ADV|B IH0 L OW1
well|ADV|W EH1 L
twice|ADV|T W AY1 S
inside|ADV|IH2 N S AY1 D
""")

VERBS = d("""
write|VERB|R AY1 T
writes|VERB|R AY1 T S
wrote|VERB|R OW1 T
sing|VERB|S IH1 NG
sings|VERB|S IH1 NG Z
sang|VERB|S AE1 NG
singing|VERB|S IH1 NG IH0 NG
dance|VERB|D AE1 N S
dances|VERB|D AE1 N S IH0 Z
wander|VERB|W AA1 N D ER0
wanders|VERB|W AA1 N D ER0 Z
whisper|VERB|W IH1 S P ER0
whispers|VERB|W IH1 S P ER0 Z
whispered|VERB|W IH1 S P ER0 D
drift|VERB|D R IH1 F T
drifts|VERB|D R IH1 F T S
rise|VERB|R AY1 Z
rises|VERB|R AY1 Z IH0 Z
rising|ADJ|R AY1 Z IH0 NG
fall|VERB|F AO1 L
falls|VERB|F AO1 L Z
fell|VERB|F EH1 L
fallen|VERB|F AO1 L AH0 N
falling|ADJ|F AO1 L IH0 NG
shine|VERB|SH AY1 N
shines|VERB|SH AY1 N Z
glows|VERB|G L OW1 Z
burn|VERB|B ER1 N
burns|VERB|B ER1 N Z
burned|VERB|B ER1 N D
burning|ADJ|B ER1 N IH0 NG
fade|VERB|F EY1 D
fades|VERB|F EY1 D Z
faded|ADJ|F EY1 D IH0 D
fading|ADJ|F EY1 D IH0 NG
bloom|VERB|B L UW1 M
blooms|VERB|B L UW1 M Z
sway|VERB|S W EY1
sways|VERB|S W EY1 Z
flow|VERB|F L OW1
flows|VERB|F L OW1 Z
grow|VERB|G R OW1
grows|VERB|G R OW1 Z
grew|VERB|G R UW1
know|VERB|N OW1
knows|VERB|N OW1 Z
knew|VERB|N UW1
see|VERB|S IY1
sees|VERB|S IY1 Z
saw|VERB|S AO1
seen|VERB|S IY1 N
hear|VERB|HH IY1 R
hears|VERB|HH IY1 R Z
heard|VERB|HH ER1 D
feel|VERB|F IY1 L
feels|VERB|F IY1 L Z
felt|VERB|F EH1 L T
find|VERB|F AY1 N D
finds|VERB|F AY1 N D Z
found|VERB|F AW1 N D
make|VERB|M EY1 K
makes|VERB|M EY1 K S
made|VERB|M EY1 D
making|VERB|M EY1 K IH0 NG
take|VERB|T EY1 K
takes|VERB|T EY1 K S
took|VERB|T UH1 K
come|VERB|K AH1 M
comes|VERB|K AH1 M Z
came|VERB|K EY1 M
go|VERB|G OW1
goes|VERB|G OW1 Z
went|VERB|W EH1 N T
gone|VERB|G AO1 N
run|VERB|R AH1 N
runs|VERB|R AH1 N Z
ran|VERB|R AE1 N
fly|VERB|F L AY1
flies|VERB|F L AY1 Z
flew|VERB|F L UW1
break|VERB|B R EY1 K
breaks|VERB|B R EY1 K S
broke|VERB|B R OW1 K
broken|ADJ|B R OW1 K AH0 N
crack|VERB|K R AE1 K
cracks|VERB|K R AE1 K S
hit|VERB|HH IH1 T
hits|VERB|HH IH1 T S
want|VERB|W AA1 N T
wants|VERB|W AA1 N T S
loves|VERB|L AH1 V Z
loved|VERB|L AH1 V D
wait|VERB|W EY1 T
waits|VERB|W EY1 T S
waiting|VERB|W EY1 T IH0 NG
watch|VERB|W AA1 CH
watches|VERB|W AA1 CH IH0 Z
turn|VERB|T ER1 N
turns|VERB|T ER1 N Z
turned|VERB|T ER1 N D
return|VERB|R IH0 T ER1 N
returns|VERB|R IH0 T ER1 N Z
carry|VERB|K AE1 R IY0
carries|VERB|K AE1 R IY0 Z
carried|VERB|K AE1 R IY0 D
bring|VERB|B R IH1 NG
brings|VERB|B R IH1 NG Z
brought|VERB|B R AO1 T
leave|VERB|L IY1 V
left|VERB|L EH1 F T
leaving|VERB|L IY1 V IH0 NG
stay|VERB|S T EY1
stays|VERB|S T EY1 Z
remain|VERB|R IH0 M EY1 N
remains|VERB|R IH0 M EY1 N Z
begin|VERB|B IH0 G IH1 N
begins|VERB|B IH0 G IH1 N Z
began|VERB|B IH0 G AE1 N
begun|VERB|B IH0 G AH1 N
seem|VERB|S IY1 M
seems|VERB|S IY1 M Z
seemed|VERB|S IY1 M D
look|VERB|L UH1 K
looks|VERB|L UH1 K S
looked|VERB|L UH1 K T
echoes|VERB|EH1 K OW0 Z
drown|VERB|D R AW1 N
drowns|VERB|D R AW1 N Z
float|VERB|F L OW1 T
floats|VERB|F L OW1 T S
melt|VERB|M EH1 L T
melts|VERB|M EH1 L T S
gather|VERB|G AE1 DH ER0
gathers|VERB|G AE1 DH ER0 Z
scatter|VERB|S K AE1 T ER0
scatters|VERB|S K AE1 T ER0 Z
tremble|VERB|T R EH1 M B AH0 L
trembles|VERB|T R EH1 M B AH0 L Z
linger|VERB|L IH1 NG G ER0
lingers|VERB|L IH1 NG G ER0 Z
settle|VERB|S EH1 T AH0 L
settles|VERB|S EH1 T AH0 L Z
sighs|VERB|S AY1 Z
cry|VERB|K R AY1
cries|VERB|K R AY1 Z
weep|VERB|W IY1 P
weeps|VERB|W IY1 P S
sweep|VERB|S W IY1 P
sleep|VERB|S L IY1 P
sleeps|VERB|S L IY1 P S
sleeping|ADJ|S L IY1 P IH0 NG
wake|VERB|W EY1 K
wakes|VERB|W EY1 K S
shakes|VERB|SH EY1 K S
hold|VERB|HH OW1 L D
holds|VERB|HH OW1 L D Z
held|VERB|HH EH1 L D
keep|VERB|K IY1 P
keeps|VERB|K IY1 P S
kept|VERB|K EH1 P T
call|VERB|K AO1 L
calls|VERB|K AO1 L Z
called|VERB|K AO1 L D
say|VERB|S EY1
says|VERB|S EH1 Z
said|VERB|S EH1 D
tell|VERB|T EH1 L
tells|VERB|T EH1 L Z
told|VERB|T OW1 L D
play|VERB|P L EY1
plays|VERB|P L EY1 Z
pray|VERB|P R EY1
prays|VERB|P R EY1 Z
climb|VERB|K L AY1 M
climbs|VERB|K L AY1 M Z
reach|VERB|R IY1 CH
reaches|VERB|R IY1 CH IH0 Z
touch|VERB|T AH1 CH
touches|VERB|T AH1 CH IH0 Z
open|VERB|OW1 P AH0 N
opens|VERB|OW1 P AH0 N Z
close|VERB|K L OW1 Z
lower|VERB|L OW1 ER0
blow|VERB|B L OW1
blows|VERB|B L OW1 Z
rests|VERB|R EH1 S T S
move|VERB|M UW1 V
moves|VERB|M UW1 V Z
pass|VERB|P AE1 S
passes|VERB|P AE1 S IH0 Z
sail|VERB|S EY1 L
sails|VERB|S EY1 L Z
spill|VERB|S P IH1 L
spills|VERB|S P IH1 L Z
hums|VERB|HH AH1 M Z
glide|VERB|G L AY1 D
glides|VERB|G L AY1 D Z
slides|VERB|S L AY1 D Z
curls|VERB|K ER1 L Z
unfold|VERB|AH0 N F OW1 L D
unfolds|VERB|AH0 N F OW1 L D Z
descends|VERB|D IH0 S EH1 N D Z
weaves|VERB|W IY1 V Z
wonder|VERB|W AH1 N D ER0
wonders|VERB|W AH1 N D ER0 Z
remember|VERB|R IH0 M EH1 M B ER0
remembers|VERB|R IH0 M EH1 M B ER0 Z
forget|VERB|F ER0 G EH1 T
forgets|VERB|F ER0 G EH1 T S
forgot|VERB|F ER0 G AA1 T
hide|VERB|HH AY1 D
hides|VERB|HH AY1 D Z
breathe|VERB|B R IY1 DH
breathes|VERB|B R IY1 DH Z
listen|VERB|L IH1 S AH0 N
listens|VERB|L IH1 S AH0 N Z
meet|VERB|M IY1 T
meets|VERB|M IY1 T S
stand|VERB|S T AE1 N D
start|VERB|S T AA1 R T
learn|VERB|L ER1 N
yearn|VERB|Y ER1 N
born|VERB|B AO1 R N
torn|VERB|T AO1 R N
crossed|VERB|K R AO1 S T
gave|VERB|G EY1 V
appear|VERB|AH0 P IH1 R
became|VERB|B IH0 K EY1 M
spoke|VERB|S P OW1 K
awoke|VERB|AH0 W OW1 K
arrives|VERB|ER0 AY1 V Z
arrived|VERB|ER0 AY1 V D
avoid|VERB|AH0 V OY1 D
destroyed|VERB|D IH0 S T R OY1 D
sought|VERB|S AO1 T
understand|VERB|AH2 N D ER0 S T AE1 N D
replace|VERB|R IY0 P L EY1 S
chase|VERB|CH EY1 S
diminishing|VERB|D IH0 M IH1 N IH0 SH IH0 NG
exalted|ADJ|IH0 G Z AO1 L T IH0 D
desired|VERB|D IH0 Z AY1 ER0 D
bound|VERB|B AW1 N D
stamping|VERB|S T AE1 M P IH0 NG
rings|VERB|R IH1 NG Z
folded|VERB|F OW1 L D IH0 D
rehearsed|VERB|R IY0 HH ER1 S T
traded|VERB|T R EY1 D IH0 D
practiced|VERB|P R AE1 K T AH0 S T
counted|VERB|K AW1 N T IH0 D
sent|VERB|S EH1 N T
""")

NOUNS = d("""
sun|NOUN|S AH1 N
moon|NOUN|M UW1 N
moonlight|NOUN|M UW1 N L AY2 T
star|NOUN|S T AA1 R
stars|NOUN|S T AA1 R Z
starlight|NOUN|S T AA1 R L AY2 T
sky|NOUN|S K AY1
skies|NOUN|S K AY1 Z
sea|NOUN|S IY1
seas|NOUN|S IY1 Z
ocean|NOUN|OW1 SH AH0 N
river|NOUN|R IH1 V ER0
rivers|NOUN|R IH1 V ER0 Z
stream|NOUN|S T R IY1 M
streams|NOUN|S T R IY1 M Z
rain|NOUN|R EY1 N
storm|NOUN|S T AO1 R M
storms|NOUN|S T AO1 R M Z
wind|NOUN|W IH1 N D|W AY1 N D
winds|NOUN|W IH1 N D Z
cloud|NOUN|K L AW1 D
clouds|NOUN|K L AW1 D Z
snow|NOUN|S N OW1
frost|NOUN|F R AO1 S T
mist|NOUN|M IH1 S T
fog|NOUN|F AA1 G
dawn|NOUN|D AO1 N
dusk|NOUN|D AH1 S K
night|NOUN|N AY1 T
nights|NOUN|N AY1 T S
day|NOUN|D EY1
days|NOUN|D EY1 Z
morning|NOUN|M AO1 R N IH0 NG
evening|NOUN|IY1 V N IH0 NG
noon|NOUN|N UW1 N
midnight|NOUN|M IH1 D N AY2 T
shadow|NOUN|SH AE1 D OW0
shadows|NOUN|SH AE1 D OW0 Z
light|NOUN|L AY1 T
lights|NOUN|L AY1 T S
darkness|NOUN|D AA1 R K N AH0 S
fire|NOUN|F AY1 ER0
fires|NOUN|F AY1 ER0 Z
flame|NOUN|F L EY1 M
flames|NOUN|F L EY1 M Z
ember|NOUN|EH1 M B ER0
embers|NOUN|EH1 M B ER0 Z
ash|NOUN|AE1 SH
ashes|NOUN|AE1 SH IH0 Z
smoke|NOUN|S M OW1 K
stone|NOUN|S T OW1 N
stones|NOUN|S T OW1 N Z
rock|NOUN|R AA1 K
rocks|NOUN|R AA1 K S
mountain|NOUN|M AW1 N T AH0 N
mountains|NOUN|M AW1 N T AH0 N Z
hill|NOUN|HH IH1 L
hills|NOUN|HH IH1 L Z
valley|NOUN|V AE1 L IY0
meadow|NOUN|M EH1 D OW0
meadows|NOUN|M EH1 D OW0 Z
field|NOUN|F IY1 L D
fields|NOUN|F IY1 L D Z
garden|NOUN|G AA1 R D AH0 N
gardens|NOUN|G AA1 R D AH0 N Z
forest|NOUN|F AO1 R AH0 S T
woods|NOUN|W UH1 D Z
tree|NOUN|T R IY1
trees|NOUN|T R IY1 Z
leaf|NOUN|L IY1 F
leaves|NOUN|L IY1 V Z
branch|NOUN|B R AE1 N CH
branches|NOUN|B R AE1 N CH IH0 Z
root|NOUN|R UW1 T
roots|NOUN|R UW1 T S
flower|NOUN|F L AW1 ER0
flowers|NOUN|F L AW1 ER0 Z
rose|NOUN|R OW1 Z
roses|NOUN|R OW1 Z IH0 Z
petal|NOUN|P EH1 T AH0 L
petals|NOUN|P EH1 T AH0 L Z
grass|NOUN|G R AE1 S
bird|NOUN|B ER1 D
birds|NOUN|B ER1 D Z
wing|NOUN|W IH1 NG
wings|NOUN|W IH1 NG Z
feather|NOUN|F EH1 DH ER0
feathers|NOUN|F EH1 DH ER0 Z
sparrow|NOUN|S P AE1 R OW0
sparrows|NOUN|S P AE1 R OW0 Z
raven|NOUN|R EY1 V AH0 N
crow|NOUN|K R OW1
owl|NOUN|AW1 L
wolf|NOUN|W UH1 L F
deer|NOUN|D IH1 R
fox|NOUN|F AA1 K S
heart|NOUN|HH AA1 R T
hearts|NOUN|HH AA1 R T S
soul|NOUN|S OW1 L
souls|NOUN|S OW1 L Z
mind|NOUN|M AY1 N D
minds|NOUN|M AY1 N D Z
eye|NOUN|AY1
eyes|NOUN|AY1 Z
hand|NOUN|HH AE1 N D
hands|NOUN|HH AE1 N D Z
voice|NOUN|V OY1 S
voices|NOUN|V OY1 S IH0 Z
song|NOUN|S AO1 NG
songs|NOUN|S AO1 NG Z
word|NOUN|W ER1 D
words|NOUN|W ER1 D Z
tale|NOUN|T EY1 L
tales|NOUN|T EY1 L Z
story|NOUN|S T AO1 R IY0
stories|NOUN|S T AO1 R IY0 Z
poem|NOUN|P OW1 AH0 M
poems|NOUN|P OW1 AH0 M Z
verse|NOUN|V ER1 S
dream|NOUN|D R IY1 M
dreams|NOUN|D R IY1 M Z
hope|NOUN|HH OW1 P
hopes|NOUN|HH OW1 P S
fear|NOUN|F IH1 R
fears|NOUN|F IH1 R Z
joy|NOUN|JH OY1
sorrow|NOUN|S AA1 R OW0
sorrows|NOUN|S AA1 R OW0 Z
grief|NOUN|G R IY1 F
tear|NOUN|T IH1 R|T EH1 R
tears|NOUN|T IH1 R Z|T EH1 R Z
memory|NOUN|M EH1 M ER0 IY0
memories|NOUN|M EH1 M ER0 IY0 Z
silence|NOUN|S AY1 L AH0 N S
music|NOUN|M Y UW1 Z IH0 K
winter|NOUN|W IH1 N T ER0
summer|NOUN|S AH1 M ER0
autumn|NOUN|AO1 T AH0 M
spring|NOUN|S P R IH1 NG
season|NOUN|S IY1 Z AH0 N
seasons|NOUN|S IY1 Z AH0 N Z
year|NOUN|Y IH1 R
years|NOUN|Y IH1 R Z
time|NOUN|T AY1 M
moment|NOUN|M OW1 M AH0 N T
moments|NOUN|M OW1 M AH0 N T S
hour|NOUN|AW1 ER0
hours|NOUN|AW1 ER0 Z
world|NOUN|W ER1 L D
earth|NOUN|ER1 TH
home|NOUN|HH OW1 M
door|NOUN|D AO1 R
doors|NOUN|D AO1 R Z
window|NOUN|W IH1 N D OW0
windows|NOUN|W IH1 N D OW0 Z
wall|NOUN|W AO1 L
walls|NOUN|W AO1 L Z
bridge|NOUN|B R IH1 JH
road|NOUN|R OW1 D
roads|NOUN|R OW1 D Z
path|NOUN|P AE1 TH
paths|NOUN|P AE1 TH S
journey|NOUN|JH ER1 N IY0
traveler|NOUN|T R AE1 V AH0 L ER0
stranger|NOUN|S T R EY1 N JH ER0
friend|NOUN|F R EH1 N D
friends|NOUN|F R EH1 N D Z
lover|NOUN|L AH1 V ER0
lovers|NOUN|L AH1 V ER0 Z
mother|NOUN|M AH1 DH ER0
father|NOUN|F AA1 DH ER0
child|NOUN|CH AY1 L D
children|NOUN|CH IH1 L D R AH0 N
king|NOUN|K IH1 NG
kings|NOUN|K IH1 NG Z
queen|NOUN|K W IY1 N
crown|NOUN|K R AW1 N
glass|NOUN|G L AE1 S
mirror|NOUN|M IH1 R ER0
candle|NOUN|K AE1 N D AH0 L
candles|NOUN|K AE1 N D AH0 L Z
lantern|NOUN|L AE1 N T ER0 N
lanterns|NOUN|L AE1 N T ER0 N Z
bell|NOUN|B EH1 L
bells|NOUN|B EH1 L Z
bottle|NOUN|B AA1 T AH0 L
bottles|NOUN|B AA1 T AH0 L Z
harbor|NOUN|HH AA1 R B ER0
ship|NOUN|SH IH1 P
ships|NOUN|SH IH1 P S
wave|NOUN|W EY1 V
waves|NOUN|W EY1 V Z
tide|NOUN|T AY1 D
tides|NOUN|T AY1 D Z
shore|NOUN|SH AO1 R
sand|NOUN|S AE1 N D
island|NOUN|AY1 L AH0 N D
feet|NOUN|F IY1 T
foot|NOUN|F UH1 T
ring|NOUN|R IH1 NG
soldier|NOUN|S OW1 L JH ER0
soldiers|NOUN|S OW1 L JH ER0 Z
soldier's|NOUN|S OW1 L JH ER0 Z
wife|NOUN|W AY1 F
wives|NOUN|W AY1 V Z
brain|NOUN|B R EY1 N
circuit|NOUN|S ER1 K AH0 T
circuits|NOUN|S ER1 K AH0 T S
mess|NOUN|M EH1 S
film|NOUN|F IH1 L M
fountain|NOUN|F AW1 N T AH0 N
thought|NOUN|TH AO1 T
thoughts|NOUN|TH AO1 T S
blinds|NOUN|B L AY1 N D Z
hummingbird|NOUN|HH AH1 M IH0 NG B ER2 D
glory|NOUN|G L AO1 R IY0
grace|NOUN|G R EY1 S
draft|NOUN|D R AE1 F T
drafts|NOUN|D R AE1 F T S
draft's|NOUN|D R AE1 F T S
pulsation|NOUN|P AH0 L S EY1 SH AH0 N
letter|NOUN|L EH1 T ER0
letters|NOUN|L EH1 T ER0 Z
page|NOUN|P EY1 JH
pages|NOUN|P EY1 JH IH0 Z
ink|NOUN|IH1 NG K
pen|NOUN|P EH1 N
love|NOUN|L AH1 V
sound|NOUN|S AW1 N D
sounds|NOUN|S AW1 N D Z
echo|NOUN|EH1 K OW0
sigh|NOUN|S AY1
glow|NOUN|G L OW1
rest|NOUN|R EH1 S T
one|NOUN|W AH1 N
decadence|NOUN|D EH1 K AH0 D AH0 N S
place|NOUN|P L EY1 S
space|NOUN|S P EY1 S
face|NOUN|F EY1 S
race|NOUN|R EY1 S
trace|NOUN|T R EY1 S
lace|NOUN|L EY1 S
pace|NOUN|P EY1 S
embrace|NOUN|EH0 M B R EY1 S
ground|NOUN|G R AW1 N D
sight|NOUN|S AY1 T
fight|NOUN|F AY1 T
flight|NOUN|F L AY1 T
delight|NOUN|D IH0 L AY1 T
way|NOUN|W EY1
clay|NOUN|K L EY1
ray|NOUN|R EY1
gold|NOUN|G OW1 L D
pain|NOUN|P EY1 N
chain|NOUN|CH EY1 N
grain|NOUN|G R EY1 N
refrain|NOUN|R IH0 F R EY1 N
line|NOUN|L AY1 N
pine|NOUN|P AY1 N
vine|NOUN|V AY1 N
wine|NOUN|W AY1 N
sign|NOUN|S AY1 N
shell|NOUN|SH EH1 L
spell|NOUN|S P EH1 L
farewell|NOUN|F EH2 R W EH1 L
thing|NOUN|TH IH1 NG
things|NOUN|TH IH1 NG Z
gleam|NOUN|G L IY1 M
beam|NOUN|B IY1 M
air|NOUN|EH1 R
hair|NOUN|HH EH1 R
prayer|NOUN|P R EH1 R
despair|NOUN|D IH0 S P EH1 R
tune|NOUN|T UW1 N
art|NOUN|AA1 R T
part|NOUN|P AA1 R T
desire|NOUN|D IH0 Z AY1 ER0
land|NOUN|L AE1 N D
bed|NOUN|B EH1 D
head|NOUN|HH EH1 D
thread|NOUN|TH R EH1 D
name|NOUN|N EY1 M
frame|NOUN|F R EY1 M
cave|NOUN|K EY1 V
grave|NOUN|G R EY1 V
side|NOUN|S AY1 D
gate|NOUN|G EY1 T
fate|NOUN|F EY1 T
dew|NOUN|D UW1
ice|NOUN|AY1 S
paradise|NOUN|P EH1 R AH0 D AY2 S
choice|NOUN|CH OY1 S
void|NOUN|V OY1 D
dove|NOUN|D AH1 V
coal|NOUN|K OW1 L
weight|NOUN|W EY1 T
shape|NOUN|SH EY1 P
longing|NOUN|L AO1 NG IH0 NG
map|NOUN|M AE1 P
taste|NOUN|T EY1 S T
choir|NOUN|K W AY1 ER0
patience|NOUN|P EY1 SH AH0 N S
ladder|NOUN|L AE1 D ER0
harvest|NOUN|HH AA1 R V AH0 S T
anatomy|NOUN|AH0 N AE1 T AH0 M IY0
museum|NOUN|M Y UW0 Z IY1 AH0 M
arithmetic|NOUN|ER0 IH1 TH M AH0 T IH0 K
cathedral|NOUN|K AH0 TH IY1 D R AH0 L
geometry|NOUN|JH IY0 AA1 M AH0 T R IY0
lexicon|NOUN|L EH1 K S IH0 K AA2 N
gloom|NOUN|G L UW1 M
thorn|NOUN|TH AO1 R N
clocks|NOUN|K L AA1 K S
afternoon|NOUN|AE2 F T ER0 N UW1 N
paper|NOUN|P EY1 P ER0
argument|NOUN|AA1 R G Y AH0 M AH0 N T
currency|NOUN|K ER1 AH0 N S IY0
orchard|NOUN|AO1 R CH ER0 D
ledger|NOUN|L EH1 JH ER0
moth|NOUN|M AO1 TH
moths|NOUN|M AO1 TH S
attic|NOUN|AE1 T IH0 K
jar|NOUN|JH AA1 R
train|NOUN|T R EY1 N
drawer|NOUN|D R AO1 R
goodbyes|NOUN|G UH2 D B AY1 Z
lives|NOUN|L IH1 V Z|L AY1 V Z
""")

ADJECTIVES = d("""
golden|ADJ|G OW1 L D AH0 N
silver|ADJ|S IH1 L V ER0
crimson|ADJ|K R IH1 M Z AH0 N
pale|ADJ|P EY1 L
bright|ADJ|B R AY1 T
soft|ADJ|S AO1 F T
gentle|ADJ|JH EH1 N T AH0 L
quiet|ADJ|K W AY1 AH0 T
silent|ADJ|S AY1 L AH0 N T
sweet|ADJ|S W IY1 T
bitter|ADJ|B IH1 T ER0
cold|ADJ|K OW1 L D
warm|ADJ|W AO1 R M
warming|ADJ|W AO1 R M IH0 NG
deep|ADJ|D IY1 P
high|ADJ|HH AY1
low|ADJ|L OW1
old|ADJ|OW1 L D
young|ADJ|Y AH1 NG
new|ADJ|N UW1
ancient|ADJ|EY1 N CH AH0 N T
little|ADJ|L IH1 T AH0 L
small|ADJ|S M AO1 L
great|ADJ|G R EY1 T
wild|ADJ|W AY1 L D
free|ADJ|F R IY1
lost|ADJ|L AO1 S T
lonely|ADJ|L OW1 N L IY0
empty|ADJ|EH1 M P T IY0
full|ADJ|F UH1 L
heavy|ADJ|HH EH1 V IY0
tender|ADJ|T EH1 N D ER0
weary|ADJ|W IH1 R IY0
hollow|ADJ|HH AA1 L OW0
sacred|ADJ|S EY1 K R AH0 D
fragile|ADJ|F R AE1 JH AH0 L
distant|ADJ|D IH1 S T AH0 N T
endless|ADJ|EH1 N D L AH0 S
frozen|ADJ|F R OW1 Z AH0 N
velvet|ADJ|V EH1 L V AH0 T
amber|ADJ|AE1 M B ER0
scarlet|ADJ|S K AA1 R L AH0 T
emerald|ADJ|EH1 M R AH0 L D
ivory|ADJ|AY1 V ER0 IY0
marble|ADJ|M AA1 R B AH0 L
delicate|ADJ|D EH1 L AH0 K AH0 T
tangled|ADJ|T AE1 NG G AH0 L D
yellow|ADJ|Y EH1 L OW0
blue|ADJ|B L UW1
green|ADJ|G R IY1 N
red|ADJ|R EH1 D
white|ADJ|W AY1 T
black|ADJ|B L AE1 K
gray|ADJ|G R EY1
obscure|ADJ|AH0 B S K Y UH1 R
sure|ADJ|SH UH1 R
hard|ADJ|HH AA1 R D
petrified|ADJ|P EH1 T R AH0 F AY2 D
hidden|ADJ|HH IH1 D AH0 N
secret|ADJ|S IY1 K R AH0 T
strange|ADJ|S T R EY1 N JH
early|ADJ|ER1 L IY0
late|ADJ|L EY1 T
last|ADJ|L AE1 S T
first|ADJ|F ER1 S T
true|ADJ|T R UW1
pure|ADJ|P Y UH1 R
round|ADJ|R AW1 N D
profound|ADJ|P R AH0 F AW1 N D
divine|ADJ|D IH0 V AY1 N
serene|ADJ|S ER0 IY1 N
fair|ADJ|F EH1 R
tall|ADJ|T AO1 L
bold|ADJ|B OW1 L D
wide|ADJ|W AY1 D
clear|ADJ|K L IH1 R
dear|ADJ|D IH1 R
whole|ADJ|HH OW1 L
brave|ADJ|B R EY1 V
same|ADJ|S EY1 M
long|ADJ|L AO1 NG
strong|ADJ|S T R AO1 NG
wrong|ADJ|R AO1 NG
slow|ADJ|S L OW1
entire|ADJ|IH0 N T AY1 ER0
higher|ADJ|HH AY1 ER0
right|ADJ|R AY1 T
asleep|ADJ|AH0 S L IY1 P
unfinished|ADJ|AH0 N F IH1 N IH0 SH T
backwards|ADV|B AE1 K W ER0 D Z
""")

ONOMATOPOEIA_WORDS = d("""
buzz|NOUN|B AH1 Z
hiss|NOUN|HH IH1 S
crash|NOUN|K R AE1 SH
bang|NOUN|B AE1 NG
boom|NOUN|B UW1 M
pop|NOUN|P AA1 P
sizzle|NOUN|S IH1 Z AH0 L
clang|NOUN|K L AE1 NG
chime|NOUN|CH AY1 M
hum|NOUN|HH AH1 M
murmur|NOUN|M ER1 M ER0
rustle|NOUN|R AH1 S AH0 L
whoosh|NOUN|W UW1 SH
splash|NOUN|S P L AE1 SH
drip|NOUN|D R IH1 P
thud|NOUN|TH AH1 D
creak|NOUN|K R IY1 K
rattle|NOUN|R AE1 T AH0 L
roar|NOUN|R AO1 R
crackle|NOUN|K R AE1 K AH0 L
patter|NOUN|P AE1 T ER0
clatter|NOUN|K L AE1 T ER0
jingle|NOUN|JH IH1 NG G AH0 L
whir|NOUN|W ER1
swish|NOUN|S W IH1 SH
thump|NOUN|TH AH1 M P
knock|NOUN|N AA1 K
click|NOUN|K L IH1 K
chirp|NOUN|CH ER1 P
croak|NOUN|K R OW1 K
howl|NOUN|HH AW1 L
growl|NOUN|G R AW1 L
snap|NOUN|S N AE1 P
rumble|NOUN|R AH1 M B AH0 L
hush|NOUN|HH AH1 SH
fizz|NOUN|F IH1 Z
gurgle|NOUN|G ER1 G AH0 L
screech|NOUN|S K R IY1 CH
squeak|NOUN|S K W IY1 K
""")

# Words the fixture corpus generator must never use; these feed the held-out
# argument list so unseen-argument test sets always have clean material.
RESERVED_WORDS = d("""
displace|VERB|D IH0 S P L EY1 S
mound|NOUN|M AW1 N D
hound|NOUN|HH AW1 N D
tight|ADJ|T AY1 T
bay|NOUN|B EY1
delay|NOUN|D IH0 L EY1
fold|VERB|F OW1 L D
plain|ADJ|P L EY1 N
lane|NOUN|L EY1 N
cane|NOUN|K EY1 N
design|NOUN|D IH0 Z AY1 N
core|NOUN|K AO1 R
store|NOUN|S T AO1 R
restore|VERB|R IH0 S T AO1 R
dwell|VERB|D W EH1 L
swell|VERB|S W EH1 L
sting|NOUN|S T IH1 NG
steep|ADJ|S T IY1 P
creep|VERB|K R IY1 P
keen|ADJ|K IY1 N
dune|NOUN|D UW1 N
balloon|NOUN|B AH0 L UW1 N
undone|ADJ|AH0 N D AH1 N
depart|VERB|D IH0 P AA1 R T
inspire|VERB|IH0 N S P AY1 ER0
recall|VERB|R IH0 K AO1 L
band|NOUN|B AE1 N D
bread|NOUN|B R EH1 D
game|NOUN|G EY1 M
shame|NOUN|SH EY1 M
save|VERB|S EY1 V
ride|NOUN|R AY1 D
create|VERB|K R IY0 EY1 T
disappear|VERB|D IH2 S AH0 P IH1 R
morn|NOUN|M AO1 R N
horn|NOUN|HH AO1 R N
worn|VERB|W AO1 R N
corn|NOUN|K AO1 R N
role|NOUN|R OW1 L
goal|NOUN|G OW1 L
stroll|VERB|S T R OW1 L
stern|ADJ|S T ER1 N
fern|NOUN|F ER1 N
cost|NOUN|K AO1 S T
tossed|VERB|T AO1 S T
glove|NOUN|G L AH1 V
threw|VERB|TH R UW1
belong|VERB|B IH0 L AO1 NG
endure|VERB|EH0 N D UH1 R
cure|NOUN|K Y UH1 R
secure|ADJ|S IH0 K Y UH1 R
nice|ADJ|N AY1 S
rejoice|VERB|R IH0 JH OY1 S
knife|NOUN|N AY1 F
knives|NOUN|N AY1 V Z
survives|VERB|S ER0 V AY1 V Z
thrives|VERB|TH R AY1 V Z
territory|NOUN|T EH1 R IH0 T AO2 R IY0
caught|VERB|K AO1 T
taught|VERB|T AO1 T
wrought|VERB|R AO1 T
blaze|NOUN|B L EY1 Z
maze|NOUN|M EY1 Z
praise|NOUN|P R EY1 Z
graze|VERB|G R EY1 Z
haze|NOUN|HH EY1 Z
pearl|NOUN|P ER1 L
swirl|NOUN|S W ER1 L
curl|NOUN|K ER1 L
brook|NOUN|B R UH1 K
nook|NOUN|N UH1 K
glint|NOUN|G L IH1 N T
flint|NOUN|F L IH1 N T
mint|NOUN|M IH1 N T
hint|NOUN|HH IH1 N T
crest|NOUN|K R EH1 S T
nest|NOUN|N EH1 S T
quest|NOUN|K W EH1 S T
west|NOUN|W EH1 S T
loom|NOUN|L UW1 M
plume|NOUN|P L UW1 M
perfume|NOUN|P ER0 F Y UW1 M
dale|NOUN|D EY1 L
gale|NOUN|G EY1 L
veil|NOUN|V EY1 L
whale|NOUN|W EY1 L
sworn|VERB|S W AO1 R N
weave|VERB|W IY1 V
grieve|VERB|G R IY1 V
believe|VERB|B IH0 L IY1 V
breeze|NOUN|B R IY1 Z
freeze|VERB|F R IY1 Z
seize|VERB|S IY1 Z
cliff|NOUN|K L IH1 F
gift|NOUN|G IH1 F T
swift|ADJ|S W IH1 F T
lift|VERB|L IH1 F T
oak|NOUN|OW1 K
cloak|NOUN|K L OW1 K
yoke|NOUN|Y OW1 K
marsh|NOUN|M AA1 R SH
lark|NOUN|L AA1 R K
spark|NOUN|S P AA1 R K
bark|NOUN|B AA1 R K
pond|NOUN|P AA1 N D
fawn|NOUN|F AO1 N
yawn|NOUN|Y AO1 N
lawn|NOUN|L AO1 N
dome|NOUN|D OW1 M
foam|NOUN|F OW1 M
roam|VERB|R OW1 M
comb|NOUN|K OW1 M
myth|NOUN|M IH1 TH
cloth|NOUN|K L AO1 TH
""")

LEXICON: dict[str, tuple[str, list[str]]] = {}
for block in (FUNCTION_WORDS, VERBS, NOUNS, ADJECTIVES, ONOMATOPOEIA_WORDS, RESERVED_WORDS):
    for word, entry in block.items():
        if word in LEXICON:
            raise SystemExit(f"word appears in two blocks: {word}")
        LEXICON[word] = entry

# "ring" is transcribed in the noun block (it is an ordinary noun too) but
# belongs on the sound list; the block dedup guard keeps it out of
# ONOMATOPOEIA_WORDS, so it is added here.
ONOMATOPOEIA = sorted(set(ONOMATOPOEIA_WORDS) | {"ring"})

STOPWORDS = sorted(
    set(FUNCTION_WORDS)
    - {"softly", "gently", "slowly", "quietly", "forever", "twice", "inside"}
)

HELDOUT_PHRASES = [
    "a garden of glass",
    "the weight of rain",
    "a crown of frost",
    "the silence between storms",
    "a letter never sent",
    "the shape of longing",
    "the hush of snow",
    "a map of rivers",
    "the taste of winter",
    "a choir of sparrows",
    "the patience of stones",
    "a ladder to the moon",
    "the memory of bells",
    "a harvest of light",
    "the anatomy of dawn",
    "a museum of tides",
    "the arithmetic of stars",
    "a cathedral of trees",
    "the geometry of wings",
    "a lexicon of rain",
]

HELDOUT_SENTENCES = [
    "The lanterns of the harbor were asleep",
    "I carried every winter in my hands",
    "The clocks forgot the shape of afternoon",
    "She folded all her sorrows into paper",
    "A stranger left a candle on the stair",
    "The tide rehearsed its argument with stone",
    "We traded silence like a currency",
    "The orchard kept a ledger of the wind",
    "My shadow practiced leaving me at noon",
    "The river wrote its name across the valley",
    "Nobody taught the moths to love the flame",
    "The attic held a jar of summer light",
    "Your voice arrived before the morning train",
    "The garden counted backwards into frost",
    "I keep a drawer of unfinished goodbyes",
]

# "stair" appears in a held-out sentence; keep it in the lexicon.
LEXICON["stair"] = ("NOUN", ["S T EH1 R"])

TEMPLATES: list[tuple[str, list[str], list[str], bool]] = [
    # (template_id, constraint kinds, paraphrase patterns, seen during training)
    ("subject", ["contains_word"], [
        "Write a poetic sentence about {arg1}",
        "Write a sentence that contains the word {arg1}",
        "Write a sentence that includes the word {arg1}",
        "Generate a poetic sentence about {arg1}",
    ], True),
    ("end", ["ends_with"], [
        "Write a poetic sentence ending in {arg1}",
        "Write a poetic sentence that ends in {arg1}",
        "Generate a poetic sentence ending in {arg1}",
    ], True),
    ("start", ["starts_with"], [
        "Write a poetic sentence that starts with the word {arg1}",
        "Write a poetic sentence starting with {arg1}",
        "Generate a poetic sentence that starts with the word {arg1}",
    ], True),
    ("rhyme", ["rhymes_with_end"], [
        "Write a poetic sentence that ends in a word which rhymes with {arg1}",
        "Write a poetic sentence ending in a word which rhymes with {arg1}",
        "Generate a poetic sentence that ends in a word which rhymes with {arg1}",
    ], True),
    ("next_sentence", ["follows_context"], [
        "Write a next sentence in a poem given the previous sentence {arg1}",
        "Write a next sentence in a poetry given the previous sentence {arg1}",
        "Generate a next sentence in a poem given the previous sentence {arg1}",
    ], True),
    ("metaphor", ["metaphor_about"], [
        "Write a metaphor about {arg1}",
        "Write a metaphor that includes the word {arg1}",
        "Generate a metaphor about {arg1}",
    ], True),
    ("simile", ["simile_about"], [
        "Write a simile about {arg1}",
        "Write a simile that includes the word {arg1}",
        "Generate a simile about {arg1}",
    ], True),
    ("onomatopoeia", ["onomatopoeia_about"], [
        "Write a poetic sentence about {arg1} showcasing onomatopoeia",
        "Generate a poetic sentence about {arg1} showcasing onomatopoeia",
    ], True),
    ("haiku", ["haiku_about"], [
        "Write a haiku about {arg1}",
        "Generate a haiku about {arg1}",
    ], True),
    ("subject_end", ["contains_word", "ends_with"], [
        "Write a poetic sentence about {arg1} and ending in {arg2}",
        "Write a sentence that contains the word {arg1} and ends in {arg2}",
        "Generate a poetic sentence about {arg1} and ending in {arg2}",
    ], True),
    ("subject_rhyme", ["contains_word", "rhymes_with_end"], [
        "Write a poetic sentence that contains the word {arg1} and ending in a word which rhymes with {arg2}",
        "Generate a poetic sentence that contains the word {arg1} and ending in a word which rhymes with {arg2}",
    ], False),
    ("start_end", ["starts_with", "ends_with"], [
        "Write a poetic sentence that starts with the word {arg1} and ending in {arg2}",
        "Generate a poetic sentence that starts with the word {arg1} and ending in {arg2}",
    ], False),
    ("start_rhyme", ["starts_with", "rhymes_with_end"], [
        "Write a poetic sentence that starts with the word {arg1} and ending in a word which rhymes with {arg2}",
        "Generate a poetic sentence that starts with the word {arg1} and ending in a word which rhymes with {arg2}",
    ], False),
    ("metaphor_end", ["metaphor_about", "ends_with"], [
        "Write a metaphor that includes the word {arg1} and ending in {arg2}",
        "Generate a metaphor that includes the word {arg1} and ending in {arg2}",
    ], False),
    ("metaphor_rhyme", ["metaphor_about", "rhymes_with_end"], [
        "Write a metaphor that includes the word {arg1} and ending in a word which rhymes with {arg2}",
        "Generate a metaphor that includes the word {arg1} and ending in a word which rhymes with {arg2}",
    ], False),
    ("simile_end", ["simile_about", "ends_with"], [
        "Write a simile that includes the word {arg1} and ending in {arg2}",
        "Generate a simile that includes the word {arg1} and ending in {arg2}",
    ], False),
    ("simile_rhyme", ["simile_about", "rhymes_with_end"], [
        "Write a simile that includes the word {arg1} and ending in a word which rhymes with {arg2}",
        "Generate a simile that includes the word {arg1} and ending in a word which rhymes with {arg2}",
    ], False),
    ("next_sentence_end", ["follows_context", "ends_with"], [
        "Write a next sentence in a poetry given the previous sentence {arg1} and ending in {arg2}",
        "Generate a next sentence in a poetry given the previous sentence {arg1} and ending in {arg2}",
    ], False),
    ("next_sentence_rhyme", ["follows_context", "rhymes_with_end"], [
        "Write a next sentence in a poetry given the previous sentence {arg1} and ending in a word which rhymes with {arg2}",
        "Generate a next sentence in a poetry given the previous sentence {arg1} and ending in a word which rhymes with {arg2}",
    ], False),
]

PHRASE_BANK: dict[str, list[str]] = {
    "opener": [
        "I wander through",
        "We drift beneath",
        "She sings beside",
        "The morning holds",
        "Night gathers over",
        "We gather near",
    ],
    "dream_opener": [
        "I dream of",
        "I sing of",
        "We speak of",
    ],
    "mid": [
        "silver river",
        "quiet garden",
        "fading light",
        "amber flame",
        "hollow bell",
        "velvet shadow",
        "ancient harbor",
        "gentle storm",
        "paper moon",
        "marble sky",
    ],
    "tail": [
        "at dusk",
        "in the rain",
        "beyond the hills",
        "under pale stars",
        "through the mist",
        "by the shore",
        "near the garden wall",
    ],
    "verb": [
        "drifts",
        "sways",
        "lingers",
        "trembles",
        "whispers",
        "settles",
        "burns",
        "blooms",
    ],
    "pad": [
        "soft",
        "still",
        "golden",
        "slowly",
        "silver",
        "morning",
        "quiet",
        "gentle",
        "amber",
        "winter",
    ],
}

# "speak" appears in a stub opener; keep it in the lexicon.
LEXICON["speak"] = ("VERB", ["S P IY1 K"])

RESERVED = sorted(RESERVED_WORDS)


def syllables(word: str) -> int:
    pron = LEXICON[word][1][0]
    return sum(1 for ph in pron.split() if ph[-1].isdigit())


ADJ_CORE = [
    "golden", "silver", "crimson", "pale", "quiet", "gentle", "silent",
    "hollow", "tender", "weary", "amber", "scarlet", "velvet", "sacred",
    "fragile", "distant", "frozen", "lonely", "ancient", "broken", "hidden",
    "secret", "emerald", "ivory",
]
NOUN_CORE = [
    "river", "garden", "moon", "sun", "star", "sea", "wind", "rain",
    "shadow", "flame", "stone", "meadow", "forest", "flower", "bird",
    "heart", "soul", "mirror", "candle", "bell", "harbor", "wave", "tide",
    "mountain", "valley", "sparrow", "raven", "ember", "lantern", "window",
    "door", "storm", "cloud", "snow", "mist",
]
VERB3_CORE = [
    "drifts", "sways", "burns", "fades", "blooms", "flows", "grows",
    "trembles", "lingers", "settles", "whispers", "wanders", "gathers",
    "scatters", "shines", "rises", "falls", "sings", "sleeps", "weeps",
    "turns", "floats", "glides", "echoes", "hums",
]
ONOM_CORE = [
    "ring", "buzz", "hum", "murmur", "crash", "chime", "rustle", "patter",
    "roar", "crackle", "clatter", "howl", "rattle", "splash", "creak",
]
ADV_CORE = ["Softly", "Gently", "Slowly", "Quietly"]

END_FAMILIES = [
    ["grace", "place", "space", "face", "race", "trace", "lace", "pace", "embrace"],
    ["ground", "round", "around", "profound", "bound"],
    ["night", "light", "bright", "sight", "flight", "delight"],
    ["day", "way", "clay", "ray", "gray", "away"],
    ["gold", "cold", "old", "bold", "told"],
    ["rain", "pain", "chain", "grain", "refrain"],
    ["line", "pine", "vine", "wine", "sign", "divine"],
    ["shore", "more", "before", "roar"],
    ["bell", "shell", "spell", "farewell", "well"],
    ["ring", "wing", "spring", "king", "thing"],
    ["deep", "sleep", "sweep"],
    ["glow", "snow", "slow", "below", "flow"],
    ["green", "queen", "serene", "between"],
    ["dream", "stream", "gleam", "beam"],
    ["air", "fair", "hair", "prayer", "despair"],
    ["moon", "soon", "tune", "noon"],
    ["sun", "none", "begun"],
    ["heart", "art", "part", "start", "apart"],
    ["fire", "desire", "entire", "higher"],
    ["fall", "call", "wall", "tall", "small"],
    ["hand", "land", "sand", "stand", "understand"],
    ["red", "bed", "head", "thread", "instead"],
    ["flame", "name", "same", "frame", "became"],
    ["wave", "cave", "grave", "brave", "gave"],
    ["side", "wide", "tide", "beside"],
    ["gate", "late", "fate", "great", "wait"],
    ["year", "near", "clear", "dear", "appear"],
    ["born", "torn"],
    ["soul", "whole", "coal"],
    ["burn", "turn", "learn", "yearn", "return"],
    ["lost", "frost", "crossed"],
    ["love", "dove", "above"],
    ["blue", "true", "dew", "new", "through", "knew", "grew"],
    ["song", "long", "strong", "along", "wrong"],
    ["sure", "obscure", "pure"],
    ["ice", "paradise"],
    ["voice", "choice"],
    ["smoke", "spoke", "awoke"],
    ["wives", "lives", "arrives"],
    ["glory", "story"],
    ["thought", "brought", "sought"],
    ["breaks", "makes", "takes", "wakes", "shakes"],
    ["void", "avoid", "destroyed"],
]


def line_template(kind: int, rng: random.Random, end: str) -> str:
    adj = rng.choice(ADJ_CORE)
    adj2 = rng.choice(ADJ_CORE)
    noun = rng.choice(NOUN_CORE)
    noun2 = rng.choice([n for n in NOUN_CORE if n != noun])
    v3 = rng.choice(VERB3_CORE)
    if kind == 0:
        return f"The {adj} {noun} {v3} beyond the {end}."
    if kind == 1:
        return f"The {noun} is like a {adj} {end}."
    if kind == 2:
        return f"A {adj} {noun} {v3} upon the {end}."
    if kind == 3:
        onom = rng.choice(ONOM_CORE)
        return f"The {onom} of {noun} {v3} through the {end}."
    if kind == 4:
        return f"My {noun} is a {adj} {end}."
    if kind == 5:
        return f"We wander through the {adj} {noun} of {end}."
    if kind == 6:
        return f"Her {noun} {v3} where the {noun2} meets the {end}."
    if kind == 7:
        return f"And still the {noun} {v3} into {end}."
    if kind == 8:
        return f"O {adj} {noun}, your {noun2} {v3} toward the {end}."
    adv = rng.choice(ADV_CORE)
    return f"{adv} the {adj2} {noun} returns to {end}."


def build_corpus() -> list[dict]:
    rng = random.Random(CORPUS_SEED)
    poems: list[dict] = []
    kind_cycle = 0
    for i in range(110):
        fam_a, fam_b = rng.sample(range(len(END_FAMILIES)), 2)
        ends_a = rng.sample(END_FAMILIES[fam_a], 2)
        ends_b = rng.sample(END_FAMILIES[fam_b], 2)
        lines = []
        for end in [ends_a[0], ends_a[1], ends_b[0], ends_b[1]]:
            lines.append(line_template(kind_cycle % 10, rng, end))
            kind_cycle += 1
        poems.append({"id": f"p{i + 1:04d}", "kind": "verse", "lines": lines})
    made = 0
    attempts = 0
    while made < 45:
        attempts += 1
        if attempts > 5000:
            raise SystemExit("could not assemble enough haiku lines")
        adj = rng.choice(ADJ_CORE)
        noun = rng.choice(NOUN_CORE)
        adj2 = rng.choice(ADJ_CORE)
        noun2 = rng.choice([n for n in NOUN_CORE if n != noun])
        v3 = rng.choice(VERB3_CORE)
        noun3 = rng.choice(NOUN_CORE)
        noun4 = rng.choice([n for n in NOUN_CORE if n != noun3])
        text = f"{adj} {noun} / a {adj2} {noun2} {v3} / {noun3} in the {noun4}"
        words = [w for w in text.replace("/", " ").split() if w]
        total = sum(syllables(w) for w in words)
        if not 15 <= total <= 19:
            continue
        made += 1
        poems.append({"id": f"h{made:04d}", "kind": "haiku", "lines": [text]})
    return poems


def corpus_vocabulary(poems: list[dict]) -> set[str]:
    vocab: set[str] = set()
    for poem in poems:
        for line in poem["lines"]:
            for token in line.lower().replace("/", " ").split():
                token = token.strip(".,;:!?'\"")
                if token:
                    vocab.add(token)
    return vocab


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    FIXTURES.mkdir(parents=True, exist_ok=True)

    poems = build_corpus()
    vocab = corpus_vocabulary(poems)
    missing = sorted(w for w in vocab if w not in LEXICON)
    if missing:
        raise SystemExit(f"corpus words missing from the lexicon: {missing}")
    leaked = sorted(set(RESERVED) & vocab)
    if leaked:
        raise SystemExit(f"reserved words leaked into the corpus: {leaked}")

    bank_words: set[str] = set()
    for fragments in PHRASE_BANK.values():
        for fragment in fragments:
            bank_words.update(w.lower() for w in fragment.split())
    missing = sorted(w for w in bank_words if w not in LEXICON)
    if missing:
        raise SystemExit(f"phrase bank words missing from the lexicon: {missing}")

    lex_lines = [
        ";;; Pronunciation lexicon in cmudict 0.7b format.",
        ";;; Curated for the bundled poetry corpus; a full cmudict file is a",
        ";;; drop-in replacement.",
    ]
    for word in sorted(LEXICON):
        pos, prons = LEXICON[word]
        head = word.upper()
        for idx, pron in enumerate(prons):
            marker = f"({idx})" if idx else ""
            lex_lines.append(f"{head}{marker}  {pron}")
    (DATA / "cmudict.txt").write_text("\n".join(lex_lines) + "\n", encoding="ascii")

    pos_lines = [f"{word}\t{LEXICON[word][0]}" for word in sorted(LEXICON)]
    (DATA / "pos_tags.tsv").write_text("\n".join(pos_lines) + "\n", encoding="ascii")

    (DATA / "onomatopoeia.txt").write_text("\n".join(ONOMATOPOEIA) + "\n", encoding="ascii")
    (DATA / "stopwords.txt").write_text("\n".join(STOPWORDS) + "\n", encoding="ascii")

    heldout = RESERVED + HELDOUT_PHRASES + HELDOUT_SENTENCES
    (DATA / "heldout_args.txt").write_text("\n".join(heldout) + "\n", encoding="ascii")

    template_lines = []
    for template_id, kinds, patterns, seen in TEMPLATES:
        for idx, pattern in enumerate(patterns):
            record = {
                "template_id": template_id,
                "paraphrase_index": idx,
                "pattern": pattern,
                "kinds": kinds,
                "composite": len(kinds) > 1,
                "seen": seen,
            }
            template_lines.append(json.dumps(record, ensure_ascii=True))
    (DATA / "templates.jsonl").write_text("\n".join(template_lines) + "\n", encoding="ascii")

    bank_lines = []
    for kind in sorted(PHRASE_BANK):
        for fragment in PHRASE_BANK[kind]:
            bank_lines.append(f"{kind}\t{fragment}")
    (DATA / "phrase_bank.txt").write_text("\n".join(bank_lines) + "\n", encoding="ascii")

    corpus_lines = [json.dumps(p, ensure_ascii=True) for p in poems]
    (FIXTURES / "corpus.jsonl").write_text("\n".join(corpus_lines) + "\n", encoding="ascii")

    n_lines = sum(len(p["lines"]) for p in poems)
    print(f"lexicon entries: {len(LEXICON)}")
    print(f"poems: {len(poems)} ({n_lines} lines)")
    print(f"held-out arguments: {len(heldout)}")
    print(f"template paraphrases: {len(template_lines)}")


if __name__ == "__main__":
    main()
