#!/usr/bin/env python3
"""Regenerate the bundled WordPiece base vocabulary.

Layout: specials, ASCII punctuation, digits, letters, ## continuations
for every single character, common suffix/prefix pieces, then a frozen
list of frequent English words plus regular inflections. Deliberately
excludes the demo slang tokens (simp/boomer/cap) so vocabulary
augmentation has something to improve.
"""

from __future__ import annotations

from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "modkit" / "data" / "wordpiece_vocab.txt"

SPECIALS = ["[PAD]", "[UNK]", "[CLS]", "[SEP]"]

PUNCT = list("!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~")
DIGITS = list("0123456789")
LETTERS = list("abcdefghijklmnopqrstuvwxyz")

SUFFIX_PIECES = """
##ing ##ed ##er ##ers ##est ##ly ##s ##es ##ies ##ied ##ier ##iest ##ying
##tion ##tions ##sion ##ness ##ment ##ments ##able ##ible ##ous ##ive
##ation ##al ##ally ##ic ##ical ##ish ##less ##ful ##en ##ize ##ise
##ity ##ities ##ism ##ist ##ists ##age ##ance ##ence ##ant ##ent
##ard ##ary ##ate ##ature ##dom ##hood ##ship ##ure ##um ##us ##ia
##le ##el ##et ##it ##on ##an ##in ##or ##ar ##ur ##ra ##ro ##ri
##ter ##ther ##der ##ber ##per ##ver ##ker ##ner ##ler ##mer ##ser
##ton ##don ##son ##man ##men ##land ##word ##ward ##work ##time
##one ##one ##thing ##body ##where ##how ##ever ##self ##selves
##ll ##ve ##re ##d ##t ##m
""".split()

PREFIX_WORDS = """
un re in de dis pre pro con com ex sub inter over under out anti auto
bi co fore mid mis non semi super trans tri ultra up down off
""".split()

STOPWORDS = """
i me my myself we our ours ourselves you your yours yourself yourselves
he him his himself she her hers herself it its itself they them their
theirs themselves what which who whom this that these those am is are
was were be been being have has had having do does did doing a an the
and but if or because as until while of at by for with about against
between into through during before after above below to from again
further then once here there when where why how all any both each few
more most other some such no nor not only own same so than too very s
t can will just don should now d ll m o re ve y ain aren couldn didn
doesn hadn hasn haven isn ma mightn mustn needn shan shouldn wasn weren
won wouldn
""".split()

COMMON_WORDS = """
time people year way day man thing woman life child world school state
family student group country problem hand part place case week company
system program question work government number night point home water
room mother area money story fact month lot right study book eye job
word business issue side kind head house service friend father power
hour game line end member law car city community name president team
minute idea kid body information back parent face others level office
door health person art war history party result change morning reason
research girl guy moment air teacher force education foot boy age
policy everybody process music market sense nation plan college
interest death experience effect use class control care field
development role student effort rate heart drug show leader light
voice wife whole police mind price report decision son view relationship
town road arm difference value building action model season society tax
director position player record paper space ground form event official
matter center couple site project activity star table need court
american internet video phone account comment post reply user profile
content media platform share follow like view trend viral clip sound
dance challenge hashtag creator audience message chat text emoji
meme joke laugh funny cool cute nice great good bad sad happy angry
mad crazy stupid dumb smart wrong true false real fake honest weird
strange normal simple easy hard tough rough soft strong weak big small
huge tiny long short tall low high deep wide old young new fresh late
early fast slow hot cold warm dark bright clear clean dirty rich poor
free full empty open closed loud quiet busy lazy brave proud calm
serious silly random basic common rare special single double triple
main major minor final first second third next last past future
present certain sure possible likely actual general public private
local global national foreign political social cultural economic
financial legal moral personal physical mental emotional digital
online offline popular famous unknown important necessary available
different similar equal opposite direct indirect positive negative
able unable ready safe dangerous healthy sick alive dead angry upset
afraid scared worried nervous excited bored tired hungry thirsty
thankful grateful sorry glad jealous curious patient polite rude mean
kind gentle cruel fair unfair selfish generous humble arrogant
confident shy honest loyal evil good decent awful terrible horrible
awesome amazing wonderful beautiful ugly pretty handsome gorgeous
attractive plain boring interesting exciting amusing annoying
frustrating confusing surprising shocking disgusting pleasant
miserable embarrassing ridiculous pathetic hilarious brilliant
clever wise foolish ignorant naive gullible skeptical critical
thinking skills brain logic reason argument opinion belief faith
doubt truth lie rumor gossip news source proof evidence claim
statement response answer reply debate discussion conversation
dialogue speech lecture topic subject theme stuff item object tool
device machine computer laptop screen keyboard mouse button click
scroll swipe tap type delete edit save upload download stream live
record camera photo picture image film movie show series episode
channel network signal wifi data cloud file folder link page website
browser search result rank score grade mark test exam quiz homework
assignment lesson course degree diploma certificate skill talent
ability knowledge wisdom intelligence memory attention focus
imagination creativity curiosity motivation ambition goal dream hope
wish desire passion love hate fear anger joy sadness surprise disgust
shame guilt pride envy greed lust sloth wrath vanity humility courage
honor respect trust loyalty friendship marriage divorce wedding
funeral birthday holiday vacation trip journey adventure travel
tourist hotel flight ticket passport luggage beach mountain river
lake ocean sea island forest desert valley hill field farm garden
park street avenue bridge tunnel station airport harbor port train
bus taxi bike truck ship boat plane rocket engine wheel tire brake
fuel gas oil electricity energy solar wind nuclear coal battery
power bulb lamp candle fire smoke ash dust dirt mud sand stone rock
metal gold silver iron steel copper glass plastic wood leather
cotton wool silk paper ink paint brush pencil pen eraser ruler
scissors knife fork spoon plate bowl cup mug bottle jar box bag
basket bucket barrel tank pipe wire rope chain lock key door window
wall roof floor ceiling stair elevator basement attic garage yard
fence gate mailbox lawn driveway neighborhood suburb downtown
village capital border region zone district territory kingdom
empire republic democracy dictatorship monarchy parliament congress
senate election vote campaign candidate politician mayor governor
senator minister ambassador embassy treaty alliance enemy ally
soldier army navy weapon gun bomb bullet sword shield armor battle
attack defense victory defeat peace treaty protest riot strike
march rally flag anthem patriot citizen immigrant refugee visa
asylum racism sexism hate speech insult slur threat bully victim
abuse harassment discrimination prejudice stereotype bias equality
justice freedom liberty rights duty responsibility crime theft
murder fraud bribe corruption arrest trial judge jury lawyer
verdict sentence prison jail fine penalty punishment parole guilt
innocence witness suspect detective officer sheriff patrol badge
emergency ambulance hospital clinic doctor nurse surgeon dentist
patient disease virus infection fever cough flu cancer diabetes
allergy vaccine medicine pill dose therapy surgery recovery
diagnosis symptom injury wound bruise scar bone muscle nerve blood
vein organ lung liver kidney stomach skin hair nail tooth tongue
lip jaw cheek chin forehead eyebrow eyelash ear nose throat neck
shoulder chest waist hip leg knee ankle toe finger thumb wrist
elbow spine rib skull flesh sweat tear saliva breath oxygen
karen boom ok okay yeah yep nope bro dude buddy pal mate fam folks
yall aint gotta wanna lemme gimme dunno kinda sorta coulda woulda
shoulda tho thru ppl omg lol lmao rofl smh tbh idk irl btw fyi
imo imho nvm jk wtf stan salty savage flex ghost slay bet fire
lit mood vibe tea shade cringe basic extra woke cancel toxic
troll spam bot fake clickbait viral trending influencer subscriber
follower unfollow block mute report ban suspend verify badge
notification feed timeline algorithm engagement impression reach
analytics metric dashboard moderator administrator rule guideline
policy violation warning appeal suspension termination
shut up racist idiot periodt watermelon burning kneel graphs
republican politician corrupt lies empty head space teach
""".split()

VERBS = """
be have do say get make go know take see come think look want give
use find tell ask work seem feel try leave call need become mean keep
let begin help talk turn start show hear play run move live believe
bring happen write sit stand lose pay meet include continue set learn
change lead understand watch follow stop create speak read spend grow
open walk win teach offer remember consider appear buy serve die send
build stay fall cut reach kill raise pass sell decide return explain
hope develop carry break receive agree support hit produce eat cover
catch draw choose wait add wish drop fly sing listen push visit wear
argue claim close cook count dance enjoy exist expect fail fill fit
fix forget hate hurt imagine invite join jump laugh lie like love
manage marry matter mention mind miss notice obtain occur order own
paint pick plan point prefer prepare pretend prevent promise protect
prove pull reduce refuse relate remain remove repeat replace require
rest ride ring rise save seek share shoot shout sleep smile sound
suffer suggest suppose throw touch train travel treat trust wake
wash wonder worry admit accept accuse achieve act adapt admire
advise afford aim allow announce annoy answer apologize applaud
apply approve arrest arrive assume attack attempt attend attract
avoid bake ban bear beat beg behave belong bend bet bite blame block
blow boil borrow bother bounce bow breathe brush burn burst bury
buzz calculate cancel cause celebrate charge chase cheat check cheer
chew chop clap clean clear climb comb compare complain complete
confirm confuse connect consist contain copy correct cost crash
crawl cross cry damage dare deal defend delay deliver demand deny
depend describe deserve destroy disagree disappear discover discuss
dislike divide doubt drag dream dress drink drive earn embarrass
employ encourage end escape examine excuse exercise expand expose
express extend face fear feed fight finish fold force forgive freeze
frighten fry gain gather glow grab greet guard guess guide handle
hang harm heal heat hide hold hug hunt identify ignore impress
improve increase inform injure insist install insult intend
interrupt introduce invent invest involve iron judge kick kiss knit
knock label land last lay lean lend lift light limit lock look
march mark measure melt mix mock mourn murder nod obey object
observe occupy offend oppose pack pardon park participate peel
perform permit persuade phone pinch pity plant please polish
possess post pour practice praise pray preach press print promote
pronounce propose pump punch punish purchase question race rain
rate realize recall recognize recommend record recover reflect
regret reject relax release rely remind rent reply rescue resist
respect respond retire reveal roast rob roll rub rule rush sail
satisfy scare scratch scream seal search seize select settle sew
shake shame shape shave shine shiver shock shop shrug sigh signal
sink ski skip slap slide slip smash smell snap sneeze sniff snore
soak solve sort spell spill spit spoil spray spread squeeze stare
steal stick sting stir stretch strike study stumble succeed suck
supply surprise surround survive swallow swear sweep swim swing
switch talk tap taste tear tease test thank tie tickle tip tire
toss trace trade translate trap tremble trick trip twist type
unite unlock upset urge vanish vote wander warn wave weigh welcome
whip whisper whistle wipe wrap wreck yell
""".split()

BLACKLIST = {"simp", "boomer", "cap", "simps", "boomers", "caps"}


def inflections(verb: str) -> list[str]:
    forms = [verb]
    if verb.endswith("e"):
        forms += [verb + "s", verb[:-1] + "ing", verb + "d"]
    elif verb.endswith("y") and len(verb) > 2 and verb[-2] not in "aeiou":
        forms += [verb[:-1] + "ies", verb + "ing", verb[:-1] + "ied"]
    else:
        forms += [verb + "s", verb + "ing", verb + "ed"]
    return forms


def build() -> list[str]:
    seen: dict[str, None] = {}

    def add(token: str):
        token = token.strip()
        if token and token not in seen and token.lower() not in BLACKLIST:
            seen[token] = None

    for token in SPECIALS:
        add(token)
    for ch in PUNCT + DIGITS + LETTERS:
        add(ch)
    for ch in LETTERS + DIGITS + PUNCT:
        add("##" + ch)
    for piece in SUFFIX_PIECES:
        add(piece)
    for word in PREFIX_WORDS + STOPWORDS + COMMON_WORDS:
        add(word)
    for verb in VERBS:
        for form in inflections(verb):
            add(form)
    return list(seen)


if __name__ == "__main__":
    tokens = build()
    OUT.write_text("\n".join(tokens) + "\n", encoding="utf-8")
    print(f"wrote {len(tokens)} tokens to {OUT}")
