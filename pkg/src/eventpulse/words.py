"""Bundled word lists: stopwords, a common-English vocabulary, and emoticons.

These lists are versioned data, not tunables. STOPWORDS is a fixed ~120-word
English function-word list; COMMON_WORDS is a ~200-word high-frequency
vocabulary used by the language heuristic. Changing either changes
classifier behaviour and invalidates frozen test expectations.
"""

STOPWORDS = frozenset("""
a about above after again against all am an and any are as at
be because been before being below between both but by
did do does doing down during
each
few for from further
had has have having he her here hers herself him himself his how
i if in into is it its itself
just
me more most my myself
no nor not now
of off on once only or other our ours ourselves out over own
same she should so some such
than that the their theirs them themselves then there these they this those
through to too
under until up
very
was we were what when where which while who whom why will with would
you your yours yourself yourselves
""".split())

# High-frequency English words (service-word heavy); at least one hit, plus a
# >=90% ASCII ratio, marks a message as English.
COMMON_WORDS = frozenset("""
the of and a to in is you that it he was for on are as with his they i at be
this have from or one had by word but not what all were we when your can said
there use an each which she do how their if will up other about out many then
them these so some her would make like him into time has look two more write
go see number no way could people my than first water been call who oil its
now find long down day did get come made may part over new sound take only
little work know place year live me back give most very after thing our just
name good sentence man think say great where help through much before line
right too mean old any same tell boy follow came want show also around form
three small set put end does another well large must big even such because
turn here why ask went men read need land different home us move try kind
hand picture again change off play spell air away animal house point page
letter mother answer found study still learn should world high every near add
food between below country plant last school father keep tree never start
city earth eye light thought head under story saw left night watch
""".split())

# Fixed emoticon inventory, removed before punctuation stripping so that
# letter-bearing faces ("xD", ":P") do not leave stray tokens behind.
EMOTICONS = (
    ":-)", ":)", ":-(", ":(", ";-)", ";)", ":-D", ":D", ";D", "=)", "=(",
    "=D", ":-P", ":P", ":p", ":-p", ":-/", ":/", ":-|", ":|", ":'(", ":o",
    ":O", ":-o", ":-O", "<3", "</3", "xD", "XD", "xd", "^_^", "-_-", "o_O",
    "O_o", "T_T", ":3",
)
