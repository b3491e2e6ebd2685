"""Generate the default French lexicon, simple-word list and verb-tense table.

The shipped resources are a small hand-curated stand-in for Lexique 3 and the
Gougenheim list: function words, common nouns/adjectives/adverbs and full
conjugations of frequent verbs. Frequencies are tiered estimates (per million
words), good enough to rank common vs. rare vocabulary.

Run from the repository root:

    python tools/build_french_resources.py

Outputs go to src/frcomplexity/resources/.
"""
from __future__ import annotations

import sys
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "frcomplexity" / "resources"

# ---------------------------------------------------------------------------
# function words: form -> (pos, freq per million)
# ---------------------------------------------------------------------------
FUNCTION_WORDS = {
    "determiner": {
        "le": 38000, "la": 30000, "les": 27000, "un": 20000, "une": 17000,
        "des": 22000, "du": 12000, "au": 7000, "aux": 3500, "ce": 9000,
        "cet": 900, "cette": 4500, "ces": 3000, "mon": 3500, "ma": 3000,
        "mes": 2300, "ton": 1500, "ta": 1200, "tes": 800, "son": 6000,
        "sa": 5200, "ses": 4500, "notre": 1800, "nos": 1300, "votre": 1900,
        "vos": 1000, "leurs": 1400, "quelques": 900, "quelque": 600,
        "chaque": 900, "plusieurs": 700, "tout": 6000, "toute": 1600,
        "tous": 3500, "toutes": 1500, "quel": 600, "quelle": 700,
        "quels": 150, "quelles": 200, "certains": 500, "certaines": 300,
        "aucune": 450, "divers": 90, "diverses": 80, "différents": 200,
    },
    "pronoun": {
        "je": 25000, "tu": 9000, "il": 18000, "elle": 8000, "on": 8000,
        "nous": 7000, "vous": 14000, "ils": 6000, "elles": 2000, "me": 5500,
        "te": 2500, "se": 9500, "moi": 4500, "toi": 2500, "lui": 5000,
        "leur": 2500, "eux": 1200, "y": 5500, "en": 16000, "ceci": 250,
        "cela": 2500, "ça": 6000, "celui": 1000, "celle": 700, "ceux": 800,
        "celles": 250, "qui": 14000, "quoi": 1800, "dont": 1800,
        "lequel": 180, "laquelle": 250, "lesquels": 120, "lesquelles": 90,
        "auquel": 60, "auxquels": 30, "auxquelles": 30, "duquel": 40,
        "desquels": 20, "desquelles": 20, "rien": 3000, "personne": 1500,
        "chacun": 500, "chacune": 150, "quiconque": 40, "autrui": 30,
        "soi": 300, "aucun": 900, "nul": 150, "nulle": 60, "mien": 40,
        "tien": 20, "sien": 40, "nôtre": 20, "vôtre": 20,
        "celui-ci": 100, "celle-ci": 100, "ceux-ci": 50, "celui-là": 60,
        "celle-là": 50, "moi-même": 80, "lui-même": 120, "elle-même": 80,
        "soi-même": 30, "eux-mêmes": 40, "nous-mêmes": 20, "vous-même": 30,
    },
    "preposition": {
        "de": 35000, "à": 22000, "dans": 7500, "par": 5000, "pour": 7800,
        "sur": 5200, "sous": 900, "avec": 5500, "sans": 2500, "chez": 900,
        "vers": 1000, "entre": 1100, "contre": 800, "depuis": 900,
        "pendant": 600, "avant": 1100, "après": 1600, "devant": 800,
        "derrière": 300, "selon": 500, "malgré": 300, "parmi": 250,
        "durant": 200, "dès": 300, "jusque": 150, "hors": 100, "envers": 60,
        "outre": 50, "via": 30, "concernant": 50, "moyennant": 10,
        "nonobstant": 5, "auprès": 120, "lors": 200, "afin": 200,
        "quant": 120, "grâce": 250, "sauf": 150, "suivant": 100,
    },
    "conjunction": {
        "et": 28000, "ou": 4000, "mais": 6000, "donc": 1700, "or": 200,
        "ni": 600, "car": 900, "que": 15000, "quand": 2500, "lorsque": 500,
        "puisque": 250, "si": 5000, "comme": 4000, "quoique": 30,
        "parce": 900, "tandis": 60, "soit": 300,
    },
    "adverb": {
        "ne": 13000, "pas": 12000, "plus": 6000, "très": 3500, "bien": 5500,
        "aussi": 2800, "encore": 2600, "toujours": 2200, "déjà": 1800,
        "jamais": 1700, "souvent": 600, "ici": 2200, "là": 3000,
        "alors": 3000, "ensuite": 500, "puis": 1000, "enfin": 1100,
        "peut-être": 1400, "trop": 1500, "assez": 900, "beaucoup": 1600,
        "peu": 1500, "moins": 1300, "tant": 700, "tellement": 500,
        "presque": 500, "vraiment": 1200, "surtout": 600, "seulement": 700,
        "ainsi": 900, "cependant": 250, "pourtant": 500, "toutefois": 150,
        "néanmoins": 80, "maintenant": 1500, "aujourd'hui": 700, "hier": 400,
        "demain": 400, "bientôt": 300, "parfois": 400, "longtemps": 600,
        "tard": 500, "tôt": 200, "vite": 600, "mal": 900, "mieux": 900,
        "ailleurs": 150, "partout": 250, "dehors": 250, "dedans": 80,
        "dessus": 150, "dessous": 80, "loin": 600, "près": 500,
        "autour": 300, "environ": 200, "plutôt": 400, "même": 3000,
        "non": 2500, "oui": 3000, "comment": 1500, "pourquoi": 1300,
        "combien": 300, "où": 3500, "autant": 200, "davantage": 120,
        "guère": 60, "nullement": 10, "point": 400, "quasiment": 40,
        "légèrement": 60, "simplement": 300, "justement": 150,
        "franchement": 100, "évidemment": 200, "certainement": 150,
        "absolument": 200, "complètement": 200, "totalement": 100,
        "extrêmement": 60, "entièrement": 60, "parfaitement": 150,
        "profondément": 60, "fortement": 60, "énormément": 30,
        "partiellement": 15, "récemment": 80, "actuellement": 80,
        "auparavant": 40, "désormais": 120, "autrefois": 60, "jadis": 15,
        "ensemble": 500, "doucement": 150, "lentement": 100,
        "rapidement": 120, "immédiatement": 80, "également": 300,
        "notamment": 150, "finalement": 150, "généralement": 80,
        "habituellement": 30, "soudain": 120, "aussitôt": 100,
        "environ": 200, "debout": 150, "volontiers": 50, "ci-dessous": 15,
        "ci-dessus": 15, "au-dessus": 80, "au-dessous": 20, "là-bas": 200,
        "tout-à-fait": 10, "surtout": 600, "sinon": 200, "autrement": 100,
        "quelquefois": 50, "naguère": 5,
    },
    "other": {
        "oh": 300, "ah": 500, "eh": 200, "hélas": 30, "bravo": 20,
        "merci": 800, "bonjour": 300, "salut": 150, "adieu": 30,
    },
}

# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------
PS_ENDINGS = {
    "a": ["ai", "as", "a", "âmes", "âtes", "èrent"],
    "i": ["is", "is", "it", "îmes", "îtes", "irent"],
    "u": ["us", "us", "ut", "ûmes", "ûtes", "urent"],
    "in": ["ins", "ins", "int", "înmes", "întes", "inrent"],
}
IMP_ENDINGS = ["ais", "ais", "ait", "ions", "iez", "aient"]
FUT_ENDINGS = ["ai", "as", "a", "ons", "ez", "ont"]
COND_ENDINGS = IMP_ENDINGS

# lemma: (present forms, imperfect stem, (passé simple stem, type),
#         future stem, past participle, present participle, freq)
IRREGULAR = {
    "être": ("suis es est sommes êtes sont", "ét", ("f", "u"), "ser", "été", "étant", 12000),
    "avoir": ("ai as a avons avez ont", "av", ("e", "u"), "aur", "eu", "ayant", 10000),
    "aller": ("vais vas va allons allez vont", "all", ("all", "a"), "ir", "allé", "allant", 3000),
    "faire": ("fais fais fait faisons faites font", "fais", ("f", "i"), "fer", "fait", "faisant", 4000),
    "dire": ("dis dis dit disons dites disent", "dis", ("d", "i"), "dir", "dit", "disant", 3500),
    "pouvoir": ("peux peux peut pouvons pouvez peuvent", "pouv", ("p", "u"), "pourr", "pu", "pouvant", 3000),
    "vouloir": ("veux veux veut voulons voulez veulent", "voul", ("voul", "u"), "voudr", "voulu", "voulant", 2500),
    "devoir": ("dois dois doit devons devez doivent", "dev", ("d", "u"), "devr", "dû", "devant", 1800),
    "savoir": ("sais sais sait savons savez savent", "sav", ("s", "u"), "saur", "su", "sachant", 2500),
    "voir": ("vois vois voit voyons voyez voient", "voy", ("v", "i"), "verr", "vu", "voyant", 2500),
    "prévoir": ("prévois prévois prévoit prévoyons prévoyez prévoient", "prévoy", ("prév", "i"), "prévoir", "prévu", "prévoyant", 150),
    "venir": ("viens viens vient venons venez viennent", "ven", ("v", "in"), "viendr", "venu", "venant", 1800),
    "tenir": ("tiens tiens tient tenons tenez tiennent", "ten", ("t", "in"), "tiendr", "tenu", "tenant", 700),
    "prendre": ("prends prends prend prenons prenez prennent", "pren", ("pr", "i"), "prendr", "pris", "prenant", 1500),
    "mettre": ("mets mets met mettons mettez mettent", "mett", ("m", "i"), "mettr", "mis", "mettant", 1000),
    "paraître": ("parais parais paraît paraissons paraissez paraissent", "paraiss", ("par", "u"), "paraîtr", "paru", "paraissant", 300),
    "connaître": ("connais connais connaît connaissons connaissez connaissent", "connaiss", ("conn", "u"), "connaîtr", "connu", "connaissant", 800),
    "naître": ("nais nais naît naissons naissez naissent", "naiss", ("naqu", "i"), "naîtr", "né", "naissant", 150),
    "partir": ("pars pars part partons partez partent", "part", ("part", "i"), "partir", "parti", "partant", 900),
    "sortir": ("sors sors sort sortons sortez sortent", "sort", ("sort", "i"), "sortir", "sorti", "sortant", 500),
    "dormir": ("dors dors dort dormons dormez dorment", "dorm", ("dorm", "i"), "dormir", "dormi", "dormant", 300),
    "sentir": ("sens sens sent sentons sentez sentent", "sent", ("sent", "i"), "sentir", "senti", "sentant", 600),
    "servir": ("sers sers sert servons servez servent", "serv", ("serv", "i"), "servir", "servi", "servant", 300),
    "mentir": ("mens mens ment mentons mentez mentent", "ment", ("ment", "i"), "mentir", "menti", "mentant", 60),
    "lire": ("lis lis lit lisons lisez lisent", "lis", ("l", "u"), "lir", "lu", "lisant", 300),
    "écrire": ("écris écris écrit écrivons écrivez écrivent", "écriv", ("écriv", "i"), "écrir", "écrit", "écrivant", 400),
    "croire": ("crois crois croit croyons croyez croient", "croy", ("cr", "u"), "croir", "cru", "croyant", 1000),
    "vivre": ("vis vis vit vivons vivez vivent", "viv", ("véc", "u"), "vivr", "vécu", "vivant", 600),
    "suivre": ("suis suis suit suivons suivez suivent", "suiv", ("suiv", "i"), "suivr", "suivi", "suivant", 300),
    "boire": ("bois bois boit buvons buvez boivent", "buv", ("b", "u"), "boir", "bu", "buvant", 200),
    "ouvrir": ("ouvre ouvres ouvre ouvrons ouvrez ouvrent", "ouvr", ("ouvr", "i"), "ouvrir", "ouvert", "ouvrant", 300),
    "offrir": ("offre offres offre offrons offrez offrent", "offr", ("offr", "i"), "offrir", "offert", "offrant", 200),
    "couvrir": ("couvre couvres couvre couvrons couvrez couvrent", "couvr", ("couvr", "i"), "couvrir", "couvert", "couvrant", 120),
    "découvrir": ("découvre découvres découvre découvrons découvrez découvrent", "découvr", ("découvr", "i"), "découvrir", "découvert", "découvrant", 200),
    "souffrir": ("souffre souffres souffre souffrons souffrez souffrent", "souffr", ("souffr", "i"), "souffrir", "souffert", "souffrant", 120),
    "mourir": ("meurs meurs meurt mourons mourez meurent", "mour", ("mour", "u"), "mourr", "mort", "mourant", 400),
    "courir": ("cours cours court courons courez courent", "cour", ("cour", "u"), "courr", "couru", "courant", 250),
    "recevoir": ("reçois reçois reçoit recevons recevez reçoivent", "recev", ("reç", "u"), "recevr", "reçu", "recevant", 250),
    "apercevoir": ("aperçois aperçois aperçoit apercevons apercevez aperçoivent", "apercev", ("aperç", "u"), "apercevr", "aperçu", "apercevant", 100),
    "conduire": ("conduis conduis conduit conduisons conduisez conduisent", "conduis", ("conduis", "i"), "conduir", "conduit", "conduisant", 150),
    "produire": ("produis produis produit produisons produisez produisent", "produis", ("produis", "i"), "produir", "produit", "produisant", 150),
    "construire": ("construis construis construit construisons construisez construisent", "construis", ("construis", "i"), "construir", "construit", "construisant", 120),
    "réduire": ("réduis réduis réduit réduisons réduisez réduisent", "réduis", ("réduis", "i"), "réduir", "réduit", "réduisant", 60),
    "plaire": ("plais plais plaît plaisons plaisez plaisent", "plais", ("pl", "u"), "plair", "plu", "plaisant", 150),
    "craindre": ("crains crains craint craignons craignez craignent", "craign", ("craign", "i"), "craindr", "craint", "craignant", 120),
    "atteindre": ("atteins atteins atteint atteignons atteignez atteignent", "atteign", ("atteign", "i"), "atteindr", "atteint", "atteignant", 80),
    "joindre": ("joins joins joint joignons joignez joignent", "joign", ("joign", "i"), "joindr", "joint", "joignant", 50),
    "valoir": ("vaux vaux vaut valons valez valent", "val", ("val", "u"), "vaudr", "valu", "valant", 200),
    "rire": ("ris ris rit rions riez rient", "ri", ("r", "i"), "rir", "ri", "riant", 200),
    "sourire": ("souris souris sourit sourions souriez sourient", "souri", ("sour", "i"), "sourir", "souri", "souriant", 100),
    "battre": ("bats bats bat battons battez battent", "batt", ("batt", "i"), "battr", "battu", "battant", 100),
    "résoudre": ("résous résous résout résolvons résolvez résolvent", "résolv", ("résol", "u"), "résoudr", "résolu", "résolvant", 40),
    "asseoir": ("assieds assieds assied asseyons asseyez asseyent", "assey", ("ass", "i"), "assiér", "assis", "asseyant", 150),
    "envoyer": ("envoie envoies envoie envoyons envoyez envoient", "envoy", ("envoy", "a"), "enverr", "envoyé", "envoyant", 200),
    "convaincre": ("convaincs convaincs convainc convainquons convainquez convainquent", "convainqu", ("convainqu", "i"), "convaincr", "convaincu", "convainquant", 50),
    "fuir": ("fuis fuis fuit fuyons fuyez fuient", "fuy", ("fu", "i"), "fuir", "fui", "fuyant", 80),
    "accueillir": ("accueille accueilles accueille accueillons accueillez accueillent", "accueill", ("accueill", "i"), "accueiller", "accueilli", "accueillant", 60),
    "exclure": ("exclus exclus exclut excluons excluez excluent", "exclu", ("excl", "u"), "exclur", "exclu", "excluant", 40),
    "inclure": ("inclus inclus inclut incluons incluez incluent", "inclu", ("incl", "u"), "inclur", "inclus", "incluant", 40),
    "interdire": ("interdis interdis interdit interdisons interdisez interdisent", "interdis", ("interd", "i"), "interdir", "interdit", "interdisant", 50),
    "cuire": ("cuis cuis cuit cuisons cuisez cuisent", "cuis", ("cuis", "i"), "cuir", "cuit", "cuisant", 60),
    "acquérir": ("acquiers acquiers acquiert acquérons acquérez acquièrent", "acquér", ("acqu", "i"), "acquerr", "acquis", "acquérant", 30),
}

# prefix derivations of irregular verbs: lemma -> base
DERIVED = {
    "devenir": "venir", "revenir": "venir", "parvenir": "venir",
    "convenir": "venir", "souvenir": "venir", "intervenir": "venir",
    "obtenir": "tenir", "appartenir": "tenir", "contenir": "tenir",
    "maintenir": "tenir", "retenir": "tenir", "soutenir": "tenir",
    "apprendre": "prendre", "comprendre": "prendre", "surprendre": "prendre",
    "reprendre": "prendre", "entreprendre": "prendre",
    "permettre": "mettre", "promettre": "mettre", "admettre": "mettre",
    "soumettre": "mettre", "transmettre": "mettre", "remettre": "mettre",
    "commettre": "mettre", "apparaître": "paraître", "disparaître": "paraître",
    "reconnaître": "connaître", "décrire": "écrire", "inscrire": "écrire",
    "prescrire": "écrire", "traduire": "conduire", "détruire": "conduire",
    "introduire": "conduire", "ressentir": "sentir", "consentir": "sentir",
    "parcourir": "courir", "recourir": "courir", "combattre": "battre",
    "débattre": "battre", "revoir": "voir", "poursuivre": "suivre",
    "peindre": "atteindre", "éteindre": "atteindre", "plaindre": "craindre",
    "contredire": "interdire", "prédire": "interdire",
}
DERIVED_FREQ = {"devenir": 800, "revenir": 700, "comprendre": 1200,
                "apprendre": 500, "permettre": 600, "reconnaître": 300,
                "obtenir": 300, "souvenir": 300, "apparaître": 200,
                "disparaître": 200, "reprendre": 400}

IMPERSONAL = {
    # lemma: (present, imperfect, passé simple, future, conditional, participle, freq)
    "falloir": ("faut", "fallait", "fallut", "faudra", "faudrait", "fallu", 1800),
    "pleuvoir": ("pleut", "pleuvait", "plut", "pleuvra", "pleuvrait", "plu", 80),
    "neiger": ("neige", "neigeait", "neigea", "neigera", "neigerait", "neigé", 20),
}

ER_VERBS = """
parler:2000 aimer:1500 donner:1800 trouver:1800 penser:2000 demander:1300
passer:1600 regarder:1300 arriver:1400 rester:1100 porter:800 entrer:600
tomber:700 appeler:900 jouer:600 manger:600 chercher:800 montrer:500
commencer:600 laisser:1000 marcher:400 travailler:600 écouter:500
habiter:200 utiliser:300 présenter:300 expliquer:400 continuer:400
considérer:200 créer:250 décider:350 développer:150 exister:250 former:150
garder:400 imaginer:300 indiquer:150 intéresser:200 lever:300 mener:200
oublier:500 préparer:300 proposer:300 raconter:300 rappeler:300 refuser:250
rencontrer:300 répéter:200 retrouver:500 sembler:900 tourner:400
accepter:300 ajouter:300 apporter:250 arrêter:600 assurer:300 attirer:100
augmenter:100 baisser:80 cacher:200 calculer:60 changer:500 chanter:200
couper:150 coûter:150 crier:200 danser:150 déclarer:150 demeurer:150
déposer:100 désirer:150 dessiner:80 deviner:100 diminuer:60 discuter:150
éviter:250 exiger:100 fermer:300 fixer:100 frapper:200 gagner:400
goûter:60 hésiter:120 ignorer:150 informer:100 insister:100 inviter:150
jeter:250 juger:150 laver:100 lancer:200 libérer:80 livrer:60 louer:80
mélanger:40 mériter:100 mesurer:60 monter:400 noter:100 observer:100
occuper:300 organiser:100 pardonner:100 partager:150 payer:300 peser:80
placer:150 pleurer:250 poser:300 pousser:200 prêter:100 prier:150
profiter:150 prononcer:100 protéger:150 prouver:100 quitter:400
réaliser:150 recommander:60 réclamer:60 regretter:150 remarquer:150
remercier:150 remplacer:100 réparer:60 respecter:100 retourner:300
réveiller:150 rêver:150 saluer:60 sauter:120 sauver:200 signer:100
signaler:60 souhaiter:200 suggérer:60 supposer:150 tirer:300 toucher:300
tuer:300 verser:80 visiter:60 voler:150 voyager:80 affirmer:100
annoncer:150 avouer:100 confirmer:80 mentionner:40 rapporter:80
préciser:80 douter:100 espérer:300 estimer:100 ordonner:80 commander:100
conseiller:60 imposer:80 obliger:100 stipuler:10 adopter:60 appliquer:80
autoriser:50 bénéficier:40 cesser:150 compenser:20 concerner:100
constater:80 contester:30 déterminer:60 effectuer:50 engager:80
entraîner:100 exercer:60 indemniser:5 limiter:50 modifier:60 notifier:5
opérer:40 prolonger:30 rembourser:20 renouveler:20 résilier:5
transférer:15 enfourner:3 émincer:2 saler:5 poivrer:3 égoutter:3
fouetter:5 beurrer:3 chauffer:20 cuisiner:15 hacher:5 incorporer:10
réserver:30 parfumer:5 assaisonner:2 dorer:5 napper:1 arroser:15
éplucher:3 ajuster:20 aider:300 allumer:60 amuser:80 approcher:200
attraper:60 avancer:200 brûler:100 casser:80 coucher:150 décrocher:20
déjeuner:50 dîner:50 dresser:60 échapper:100 éclairer:50 embrasser:100
emporter:100 enlever:80 entourer:60 envoler:30 essayer:300 étudier:100
expliquer:400 glisser:80 habiller:50 inquiéter:100 installer:150
marier:100 oser:150 pencher:80 pêcher:30 plonger:60 pratiquer:60
presser:60 prêcher:10 rattraper:30 reposer:100 rentrer:300 respirer:100
retirer:100 sécher:30 sonner:100 soulever:60 terminer:150 traverser:150
trembler:100 tromper:100 vérifier:60 mouiller:20 nager:30 briller:60
grimper:30 ramasser:60 siffler:20 souffler:60 caresser:30 cueillir_:0
réglementer:5 abroger:3 édicter:3 promulguer:3 statuer:5 alléguer:3
invoquer:15 présumer:15 sanctionner:10 assujettir_:0 exempter:3
déroger:3 habiliter:3 mandater:3 prescrire_:0 contracter:15 souscrire_:0
""".split()

IR_VERBS = """
finir:500 choisir:300 réussir:300 agir:300 grandir:100 remplir:150
réfléchir:150 saisir:150 bâtir:60 établir:150 fournir:100 garantir:60
punir:50 rougir:50 obéir:50 nourrir:80 guérir:60 réunir:100 définir:80
investir:30 rôtir:5 applaudir:20 avertir:40 accomplir:60 rétablir:30
frémir:30 vieillir:60 maigrir:15 blanchir:15 unir:40 assujettir:5
""".split()

RE_VERBS = """
attendre:900 entendre:1000 vendre:200 répondre:800 perdre:600
descendre:300 défendre:200 dépendre:150 prétendre:150 rendre:900
tendre:200 étendre:100 suspendre:40 correspondre:60 confondre:50
fondre:50 mordre:40 tordre:20 répandre:40
""".split()

# ---------------------------------------------------------------------------
# nouns / adjectives (lemma:freq). "simple" groups also feed the simple list.
# ---------------------------------------------------------------------------
SIMPLE_NOUNS = """
homme:1200 femme:1000 enfant:800 jour:1500 temps:1500 chose:1200 vie:1100
monde:900 main:900 maison:800 père:700 mère:700 fois:1500 an:900 année:600
ami:500 amie:200 tête:700 yeux:600 œil:200 porte:500 nuit:700 eau:500
coeur:400 cœur:400 mot:500 pays:500 ville:400 rue:300 chat:150 chien:200
table:250 lit:250 livre:300 école:250 classe:150 enfance:80 fille:600
garçon:300 frère:300 sœur:250 famille:300 bois:200 arbre:200 fleur:120
soleil:200 lune:100 ciel:250 terre:400 mer:300 pluie:100 neige:60 vent:200
nuage:60 oiseau:120 poisson:80 cheval:150 vache:40 lapin:40 souris_:0
loup:80 ours:50 roi:300 reine:100 princesse:60 prince:80 château:150
forêt:150 jardin:200 route:200 voiture:250 train:150 bateau:120 pain:150
lait:80 pomme:60 gâteau:60 sucre:60 sel:40 beurre:40 farine:30 œuf:60
oeuf:20 fromage:40 viande:40 légume:30 fruit:60 soupe:40 assiette:40
verre:150 tasse:40 four:40 feu:300 cuisine:100 chambre:300 fenêtre:250
mur:250 jeu:200 balle:60 jouet:20 cadeau:80 fête:150 matin:500 soir:500
midi:100 heure:800 minute:300 semaine:300 mois:300 moment:600 histoire:500
question:400 réponse:250 nom:500 idée:400 travail:400 argent:300 place:400
pied:300 bras:250 bouche:200 voix:400 visage:300 corps:300 cheveu:150
robe:100 chapeau:80 chaussure:40 sac:80 lettre:300 papier:150 photo:80
film:100 musique:150 chanson:80 image:200 couleur:150 bleu_:0 village:150
magasin:60 marché:150 église:120 hôpital:80 médecin:150 docteur:150
maître:200 maîtresse:60 élève:100 professeur:100 dame:150 monsieur:700
madame:400 bébé:100 papa:300 maman:300 grand-mère:80 grand-père:80
animal:100 bête:150 cochon:40 poule:40 canard:30 souris:60 renard:40
mouton:40 petit-déjeuner:20 dîner:80 repas:100 bonbon:20 chocolat:40
carotte:15 tomate:20 oignon:20 pomme-de-terre:5 casserole:10 poêle:10
cuillère:15 bol:15 plat:60 recette:20 minute_:0 sorte:200 façon:300
chemin:250 côté:400 fin:400 début:150 bout:250 point_:0 partie:400
groupe:200 ligne:150 lieu:300 pièce:200 paix:150 guerre:300 peur:400
joie:150 amour:400 rêve:150 sourire_:0 larme:150 cri:150 bruit:200
silence:200 lumière:250 ombre:150 nez:100 dent:60 oreille:100 genou:60
doigt:150 dos:150 ventre:100 sang:200 froid:200 chaud_:0 chaleur:100
été:250 hiver:150 printemps:80 automne:60 dimanche:100 lundi:60
vacances:80 plage:60 montagne:100 rivière:80 lac:60 île:80 pierre:150
sable:40 herbe:60 feuille:100 branche:60 étoile:80 nouvelle:150
""".split()

MID_NOUNS = """
gouvernement:200 société:250 pouvoir:300 service:200 politique:200
information:150 système:200 projet:150 entreprise:150 problème:300
situation:200 question_:0 population:100 région:150 province:60
ministre:150 président:200 journal:100 article:150 économie:80
développement:100 production:80 recherche:120 étude:120 résultat:120
nombre:200 niveau:150 forme:200 condition:150 rapport:150 cas:300
exemple:200 raison:300 sens:250 effet:150 élément:100 espèce:100
siècle:200 période:100 époque:150 histoire_:0 origine:80 nature:150
science:100 langue:150 langage:60 culture:100 art:200 théâtre:80
auteur:100 roman:100 personnage:80 récit:40 chapitre:40 scène:100
université:80 cours:200 programme:100 chercheur:20 méthode:60
technologie:40 réseau:60 ordinateur:40 internet:30 site:40 donnée:40
santé:100 maladie:100 traitement:60 patient:30 vaccin:10 virus:20
hausse:30 baisse:30 prix:150 coût:60 taux:40 marché_:0 emploi:60
travailleur:30 citoyen:50 électeur:10 élection:40 parti:100 débat:40
conflit:60 crise:60 accord:100 décision:120 mesure:100 objectif:60
défi:30 enjeu:30 secteur:50 domaine:80 territoire:50 capitale:40
fleuve:40 climat:30 environnement:40 énergie:50 température:40
siège:60 sport:50 équipe:60 match:30 joueur:30 saison:60 victoire:40
""".split()

ADVANCED_NOUNS = """
contrat:40 assurance:20 assureur:5 assuré:5 police:60 prime:10 sinistre:5
indemnité:5 franchise:5 garantie:15 clause:5 avenant:2 souscripteur:1
bénéficiaire:5 couverture:15 dommage:20 préjudice:5 responsabilité:40
obligation:20 disposition:40 paragraphe:5 alinéa:2 loi:100 règlement:20
article_:0 tribunal:30 juge:40 justice:80 droit:200 devoir_:0 code:30
procédure:15 jugement:20 cour:100 arrêt:40 décret:10 ordonnance:5
législation:5 législateur:2 juridiction:3 litige:5 partie_:0 demandeur:2
défendeur:1 requérant:1 intimé:1 appelant:1 mandataire:2 ministère:30
administration:30 autorité:40 organisme:20 institution:30 corporation:3
municipalité:5 sanction:10 infraction:10 amende:10 poursuite:15
pénalité:2 résiliation:1 exonération:1 exclusion:5 stipulation:1
réclamation:5 remboursement:5 versement:3 prestation:5 cotisation:3
échéance:5 exécution:20 application:40 interprétation:15 présomption:2
modalité:5 conformité:5 compétence:20 habilitation:1 dérogation:1
abrogation:1 promulgation:1 adoption:15 vigueur:10 effet_:0
philosophie:30 concept:20 essence:20 conscience:60 raisonnement:10
connaissance:60 hypothèse:20 théorie:40 argument:20 phénomène:30
perception:15 réalité:80 existence:60 liberté:100 morale:30 éthique:10
notion:20 paradigme:2 dialectique:2 ontologie:1 épistémologie:1
métaphysique:3 subjectivité:2 transcendance:2 immanence:1
""".split()

SIMPLE_ADJECTIVES = """
grand:1500 petit:1500 bon:1200 beau:800 nouveau:700 vieux:600 jeune:500
long:400 gros:300 haut:300 bas_:0 blanc:300 noir:400 rouge:200 bleu:150
vert:150 jaune:60 gris:100 rose:60 joli:150 gentil:100 méchant:50
content:150 heureux:200 triste:150 seul:600 dernier:500 premier:900
autre:2500 même_:0 tout_:0 vrai:400 faux:100 chaud:100 froid_:0 doux:150
dur:200 facile:150 difficile:200 simple:200 propre:200 sale:60 plein:300
vide:150 fort:400 faible:100 rapide:60 lent:40 clair:150 sombre:80
drôle:100 mauvais:300 meilleur:300 pauvre:250 riche:150 malade:100
fatigué:100 prêt:200 sûr:400 possible:300 important:250 seul_:0
fin_:0 large:100 court:80 lourd:100 léger:100 frais:80 chaud_:0
tendre:60 délicieux:20 sucré:10 salé:10 cuit:15 moyen:60 entier:150
""".split()

ADVANCED_ADJECTIVES = """
juridique:10 légal:15 pénal:5 civil:40 contractuel:2 administratif:10
conforme:10 applicable:10 réputé:5 exigible:1 assujetti:2 présumé:3
subséquent:1 afférent:1 susmentionné:1 préalable:10 ultérieur:5
antérieur:10 législatif:5 réglementaire:3 municipal:5 provincial:10
fédéral:20 national:60 international:40 économique:50 social:80
politique_:0 scientifique:30 technique:30 historique:40 culturel:20
philosophique:10 abstrait:10 complexe:30 essentiel:40 fondamental:20
particulier:80 général:80 principal:60 nécessaire:100 suffisant:20
raisonnable:15 éventuel:10 relatif:20 respectif:5 distinct:10
considérable:20 notable:5 significatif:5 intrinsèque:1 inhérent:2
empirique:2 rationnel:5 moral:30 humain:150 naturel:80 public:100
""".split()

IRREGULAR_ADJ = {
    "beau": ["belle", "beaux", "belles", "bel"],
    "nouveau": ["nouvelle", "nouveaux", "nouvelles", "nouvel"],
    "vieux": ["vieille", "vieilles", "vieil"],
    "blanc": ["blanche", "blancs", "blanches"],
    "long": ["longue", "longs", "longues"],
    "doux": ["douce", "douces"],
    "faux": ["fausse", "fausses"],
    "gentil": ["gentille", "gentils", "gentilles"],
    "bon": ["bonne", "bons", "bonnes"],
    "gros": ["grosse", "grosses"],
    "frais": ["fraîche", "fraîches"],
    "public": ["publique", "publics", "publiques"],
    "sec": ["sèche", "secs", "sèches"],
    "léger": ["légère", "légers", "légères"],
    "premier": ["première", "premiers", "premières"],
    "dernier": ["dernière", "derniers", "dernières"],
    "entier": ["entière", "entiers", "entières"],
    "particulier": ["particulière", "particuliers", "particulières"],
}

OTHER_ADVERB_SUFFIX_FREE = ["d'abord"]  # documentation only; split by the tokenizer


def _plural_noun(w: str) -> str:
    if w[-1] in "sxz":
        return w
    if w.endswith("al") and w not in {"festival", "bal", "carnaval"}:
        return w[:-2] + "aux"
    if w.endswith(("eau", "eu", "au")):
        return w + "x"
    return w + "s"


def _adj_forms(w: str) -> list[str]:
    if w in IRREGULAR_ADJ:
        return [w] + IRREGULAR_ADJ[w]
    forms = [w]
    if w.endswith("e"):
        fem = w
    elif w.endswith("eux"):
        fem = w[:-1] + "se"
    elif w.endswith("if"):
        fem = w[:-1] + "ve"
    elif w.endswith("er"):
        fem = w[:-2] + "ère"
    elif w.endswith(("el", "en", "on")):
        fem = w + w[-1] + "e"
    else:
        fem = w + "e"
    forms.append(fem)
    forms.append(_plural_noun(w) if not w.endswith("al") else w[:-2] + "aux")
    forms.append(fem if fem.endswith("s") else fem + "s")
    return list(dict.fromkeys(forms))


def _parse_list(block) -> list[tuple[str, int]]:
    out = []
    for item in block:
        word, freq = item.rsplit(":", 1)
        if word.endswith("_"):
            continue
        out.append((word, int(freq)))
    return out


def _persons(stem: str, endings: list[str]) -> list[str]:
    return [stem + e for e in endings]


def _soften(stem: str, ending: str) -> str:
    # manger -> mangeons, commencer -> commençons
    if ending[:1] in ("a", "o", "â") and stem.endswith("g"):
        return stem + "e" + ending
    if ending[:1] in ("a", "o", "â") and stem.endswith("c"):
        return stem[:-1] + "ç" + ending
    return stem + ending


def conjugate_er(lemma: str) -> dict[str, list[str]]:
    stem = lemma[:-2]
    pres = [_soften(stem, e) for e in ["e", "es", "e", "ons", "ez", "ent"]]
    return {
        "infinitive": [lemma],
        "present": pres,
        "imperfect": [_soften(stem, e) for e in IMP_ENDINGS],
        "simple_past": [_soften(stem, e) for e in PS_ENDINGS["a"]],
        "future": _persons(lemma, FUT_ENDINGS),
        "conditional": _persons(lemma, COND_ENDINGS),
        "participle": [stem + "é", stem + "ée", stem + "és", stem + "ées"],
        "present_participle": [_soften(stem, "ant")],
    }


def conjugate_ir(lemma: str) -> dict[str, list[str]]:
    stem = lemma[:-2]
    return {
        "infinitive": [lemma],
        "present": _persons(stem, ["is", "is", "it", "issons", "issez", "issent"]),
        "imperfect": _persons(stem + "iss", IMP_ENDINGS),
        "simple_past": _persons(stem, PS_ENDINGS["i"]),
        "future": _persons(lemma, FUT_ENDINGS),
        "conditional": _persons(lemma, COND_ENDINGS),
        "participle": [stem + "i", stem + "ie", stem + "is", stem + "ies"],
        "present_participle": [stem + "issant"],
    }


def conjugate_re(lemma: str) -> dict[str, list[str]]:
    stem = lemma[:-2]
    return {
        "infinitive": [lemma],
        "present": _persons(stem, ["s", "s", "", "ons", "ez", "ent"]),
        "imperfect": _persons(stem, IMP_ENDINGS),
        "simple_past": _persons(stem, PS_ENDINGS["i"]),
        "future": _persons(lemma[:-1], FUT_ENDINGS),
        "conditional": _persons(lemma[:-1], COND_ENDINGS),
        "participle": [stem + "u", stem + "ue", stem + "us", stem + "ues"],
        "present_participle": [stem + "ant"],
    }


def _pp_forms(pp: str) -> list[str]:
    if pp == "été":
        return [pp]
    if pp.endswith("s"):
        return [pp, pp + "e", pp + "es"]
    if pp.endswith("û"):
        return [pp, pp[:-1] + "ue", pp[:-1] + "us", pp[:-1] + "ues"]
    return [pp, pp + "e", pp + "s", pp + "es"]


def conjugate_irregular(lemma: str, entry) -> dict[str, list[str]]:
    pres, imp, (ps_stem, ps_type), fut, pp, ppr, _ = entry
    return {
        "infinitive": [lemma],
        "present": pres.split(),
        "imperfect": _persons(imp, IMP_ENDINGS),
        "simple_past": _persons(ps_stem, PS_ENDINGS[ps_type]),
        "future": _persons(fut, FUT_ENDINGS),
        "conditional": _persons(fut, COND_ENDINGS),
        "participle": _pp_forms(pp),
        "present_participle": [ppr],
    }


def _derive(lemma: str, base: str) -> dict[str, list[str]]:
    prefix = lemma[: len(lemma) - len(base)]
    table = conjugate_irregular(base, IRREGULAR[base])
    out = {}
    for tense, forms in table.items():
        derived = []
        out[tense] = [prefix + f for f in forms]
    out["infinitive"] = [lemma]
    return out


TENSE_WEIGHT = {
    "infinitive": 0.20, "present": 0.35, "imperfect": 0.12,
    "simple_past": 0.04, "future": 0.05, "conditional": 0.04,
    "participle": 0.15, "present_participle": 0.05,
}


def build() -> tuple[dict, dict, set]:
    """Return (entries, tenses, simple_forms)."""
    entries: dict[str, tuple[str, float, str]] = {}
    # form -> (lemma, freq, tenses) for the most frequent verb reading
    tenses: dict[str, tuple[str, float, list[str]]] = {}
    simple: set[str] = set()

    def add(form, lemma, freq, pos, is_simple):
        form = form.lower()
        freq = round(float(freq), 2)
        cur = entries.get(form)
        if cur is None or freq > cur[1]:
            entries[form] = (lemma, freq, pos)
        if is_simple:
            simple.add(form)

    for pos, words in FUNCTION_WORDS.items():
        for w, f in words.items():
            add(w, w, f, pos, True)

    def add_verb(lemma, table, freq):
        is_simple = freq >= 100
        for tense, forms in table.items():
            per_form = freq * TENSE_WEIGHT[tense] / max(1, len(forms))
            for form in forms:
                f = max(per_form, 0.5)
                add(form, lemma, f, "verb", is_simple)
                cur = tenses.get(form)
                if cur is None or (cur[0] != lemma and f > cur[1]):
                    tenses[form] = (lemma, f, [tense])
                elif cur[0] == lemma and tense not in cur[2]:
                    cur[2].append(tense)

    for lemma, entry in IRREGULAR.items():
        add_verb(lemma, conjugate_irregular(lemma, entry), entry[-1])
    for lemma, base in DERIVED.items():
        add_verb(lemma, _derive(lemma, base), DERIVED_FREQ.get(lemma, 80))
    for lemma, forms in IMPERSONAL.items():
        *fs, freq = forms
        table = dict(zip(["present", "imperfect", "simple_past", "future",
                          "conditional", "participle"], [[f] for f in fs]))
        table["infinitive"] = [lemma]
        add_verb(lemma, table, freq)
    for lemma, freq in _parse_list(ER_VERBS):
        if lemma in IRREGULAR or lemma in DERIVED:
            continue
        add_verb(lemma, conjugate_er(lemma), freq)
    for lemma, freq in _parse_list(IR_VERBS):
        add_verb(lemma, conjugate_ir(lemma), freq)
    for lemma, freq in _parse_list(RE_VERBS):
        add_verb(lemma, conjugate_re(lemma), freq)

    for block, is_simple in ((SIMPLE_NOUNS, True), (MID_NOUNS, False),
                             (ADVANCED_NOUNS, False)):
        for lemma, freq in _parse_list(block):
            simple_here = is_simple or freq >= 150
            add(lemma, lemma, freq * 0.7, "noun", simple_here)
            add(_plural_noun(lemma), lemma, freq * 0.3, "noun", simple_here)
    for block, is_simple in ((SIMPLE_ADJECTIVES, True),
                             (ADVANCED_ADJECTIVES, False)):
        for lemma, freq in _parse_list(block):
            forms = _adj_forms(lemma)
            simple_here = is_simple or freq >= 150
            for form in forms:
                add(form, lemma, freq / len(forms), "adjective", simple_here)
    return entries, tenses, simple


def main() -> int:
    entries, tenses, simple = build()
    OUT.mkdir(parents=True, exist_ok=True)
    with open(OUT / "lexicon_fr.tsv", "w", encoding="utf-8") as fh:
        fh.write("form\tlemma\tfreq_per_million\tpos\n")
        for form in sorted(entries):
            lemma, freq, pos = entries[form]
            fh.write(f"{form}\t{lemma}\t{freq:g}\t{pos}\n")
    with open(OUT / "simple_words_fr.txt", "w", encoding="utf-8") as fh:
        fh.write("# Basic French vocabulary (generated by tools/build_french_resources.py)\n")
        for form in sorted(simple):
            fh.write(form + "\n")
    with open(OUT / "verb_tenses_fr.tsv", "w", encoding="utf-8") as fh:
        fh.write("# form<TAB>lemma<TAB>tenses (generated by tools/build_french_resources.py)\n")
        for form in sorted(tenses):
            lemma, _, tl = tenses[form]
            fh.write(f"{form}\t{lemma}\t{'|'.join(tl)}\n")
    print(f"{len(entries)} lexicon entries, {len(simple)} simple forms, "
          f"{len(tenses)} verb forms", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
