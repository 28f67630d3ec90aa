#include "geval/entities.hpp"

#include "geval/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace geval {

namespace {

std::string to_lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Embedded default lexicon, same format as the on-disk files. Unknown
// words fall through to the suffix rules, so this only needs closed-class
// words plus the open-class words those rules would mis-tag.
constexpr const char* kBuiltinLexicon = R"(the	DET
a	DET
an	DET
this	DET
that	DET
these	DET
those	DET
any	DET
some	DET
each	DET
every	DET
no	DET
its	DET
his	DET
her	DET
their	DET
my	DET
your	DET
our	DET
it	PRON
he	PRON
she	PRON
they	PRON
i	PRON
you	PRON
we	PRON
them	PRON
him	PRON
us	PRON
me	PRON
who	PRON
whom	PRON
what	PRON
which	PRON
something	PRON
anything	PRON
nothing	PRON
there	OTHER
here	OTHER
not	OTHER
also	OTHER
very	OTHER
how	OTHER
when	OTHER
where	OTHER
why	OTHER
yes	OTHER
and	OTHER
or	OTHER
but	OTHER
if	OTHER
than	OTHER
as	OTHER
is	VERB
are	VERB
was	VERB
were	VERB
be	VERB
been	VERB
being	VERB
am	VERB
do	VERB
does	VERB
did	VERB
has	VERB
have	VERB
had	VERB
can	VERB
could	VERB
will	VERB
would	VERB
shall	VERB
should	VERB
may	VERB
might	VERB
must	VERB
seem	VERB
seems	VERB
appear	VERB
appears	VERB
exist	VERB
exists	VERB
look	VERB
looks	VERB
sit	VERB
sits	VERB
stand	VERB
stands	VERB
lie	VERB
lies	VERB
hang	VERB
hangs	VERB
hold	VERB
holds	VERB
wear	VERB
wears	VERB
face	VERB
faces	VERB
show	VERB
shows	VERB
in	ADP
on	ADP
at	ADP
by	ADP
of	ADP
to	ADP
from	ADP
with	ADP
without	ADP
under	ADP
over	ADP
above	ADP
below	ADP
behind	ADP
beside	ADP
between	ADP
near	ADP
inside	ADP
outside	ADP
within	ADP
into	ADP
onto	ADP
off	ADP
up	ADP
down	ADP
across	ADP
through	ADP
around	ADP
against	ADP
along	ADP
beneath	ADP
underneath	ADP
toward	ADP
towards	ADP
upon	ADP
about	ADP
one	NUM
two	NUM
three	NUM
four	NUM
five	NUM
six	NUM
seven	NUM
eight	NUM
nine	NUM
ten	NUM
red	ADJ
blue	ADJ
green	ADJ
yellow	ADJ
black	ADJ
white	ADJ
brown	ADJ
gray	ADJ
grey	ADJ
orange	ADJ
purple	ADJ
pink	ADJ
golden	ADJ
dark	ADJ
bright	ADJ
big	ADJ
small	ADJ
large	ADJ
little	ADJ
tiny	ADJ
huge	ADJ
tall	ADJ
short	ADJ
long	ADJ
wide	ADJ
narrow	ADJ
thin	ADJ
thick	ADJ
old	ADJ
young	ADJ
new	ADJ
many	ADJ
few	ADJ
several	ADJ
both	ADJ
open	ADJ
closed	ADJ
empty	ADJ
full	ADJ
main	ADJ
same	ADJ
different	ADJ
other	ADJ
first	ADJ
second	ADJ
third	ADJ
next	ADJ
upper	ADJ
lower	ADJ
leftmost	ADJ
rightmost	ADJ
wooden	ADJ
left	NOUN
right	NOUN
top	NOUN
bottom	NOUN
side	NOUN
middle	NOUN
front	NOUN
back	NOUN
center	NOUN
corner	NOUN
edge	NOUN
picture	NOUN
image	NOUN
photo	NOUN
photograph	NOUN
scene	NOUN
parking	NOUN
building	NOUN
painting	NOUN
ceiling	NOUN
lighting	NOUN
clothing	NOUN
bed	NOUN
light	NOUN
cell	NOUN
glass	NOUN
)";

}  // namespace

std::string to_string(Pos pos) {
    switch (pos) {
        case Pos::DET: return "DET";
        case Pos::ADJ: return "ADJ";
        case Pos::NOUN: return "NOUN";
        case Pos::NUM: return "NUM";
        case Pos::VERB: return "VERB";
        case Pos::ADP: return "ADP";
        case Pos::PRON: return "PRON";
        case Pos::OTHER: return "OTHER";
    }
    return "OTHER";
}

std::optional<Pos> pos_from_string(const std::string& name) {
    if (name == "DET") return Pos::DET;
    if (name == "ADJ") return Pos::ADJ;
    if (name == "NOUN") return Pos::NOUN;
    if (name == "NUM") return Pos::NUM;
    if (name == "VERB") return Pos::VERB;
    if (name == "ADP") return Pos::ADP;
    if (name == "PRON") return Pos::PRON;
    if (name == "OTHER") return Pos::OTHER;
    return std::nullopt;
}

std::vector<Token> tokenize(const std::string& question) {
    std::vector<Token> tokens;
    std::string current;
    bool current_digits = false;

    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back(Token{current, Pos::OTHER, tokens.size()});
            current.clear();
        }
    };

    for (char c : question) {
        const auto uc = static_cast<unsigned char>(c);
        if (std::isalpha(uc)) {
            if (!current.empty() && current_digits) flush();
            current_digits = false;
            current.push_back(c);
        } else if (std::isdigit(uc)) {
            if (!current.empty() && !current_digits) flush();
            current_digits = true;
            current.push_back(c);
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

TagLexicon TagLexicon::builtin() {
    TagLexicon lex;
    std::istringstream in(kBuiltinLexicon);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto tab = line.find('\t');
        auto pos = pos_from_string(line.substr(tab + 1));
        lex.table_[line.substr(0, tab)] = *pos;
    }
    return lex;
}

TagLexicon TagLexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw LexiconMissingError(path.string());

    TagLexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            throw MalformedLexiconLineError(line_no, "expected word<TAB>TAG");
        }
        auto pos = pos_from_string(line.substr(tab + 1));
        if (!pos) {
            throw MalformedLexiconLineError(line_no, "unknown tag '" + line.substr(tab + 1) + "'");
        }
        lex.table_[to_lower(line.substr(0, tab))] = *pos;
    }
    return lex;
}

std::optional<Pos> TagLexicon::lookup(const std::string& lowercase_word) const {
    auto it = table_.find(lowercase_word);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

std::vector<Pos> RuleTagger::tag(const std::vector<Token>& tokens) const {
    std::vector<Pos> tags;
    tags.reserve(tokens.size());
    for (const Token& t : tokens) {
        if (all_digits(t.text)) {
            tags.push_back(Pos::NUM);
            continue;
        }
        const std::string lower = to_lower(t.text);
        if (auto pos = lexicon_.lookup(lower)) {
            tags.push_back(*pos);
            continue;
        }
        // Suffix rules for unknown words; default NOUN.
        if (lower.size() > 4 && ends_with(lower, "ing")) {
            tags.push_back(Pos::VERB);
        } else if (lower.size() > 3 && ends_with(lower, "ed")) {
            tags.push_back(Pos::VERB);
        } else if (lower.size() > 3 && ends_with(lower, "ly")) {
            tags.push_back(Pos::OTHER);
        } else if (lower.size() > 4 &&
                   (ends_with(lower, "ous") || ends_with(lower, "ful") ||
                    ends_with(lower, "ive") || ends_with(lower, "able") ||
                    ends_with(lower, "ible") || ends_with(lower, "ish"))) {
            tags.push_back(Pos::ADJ);
        } else {
            tags.push_back(Pos::NOUN);
        }
    }
    return tags;
}

std::vector<Token> pos_tag(std::vector<Token> tokens, const PosTagger& tagger) {
    const std::vector<Pos> tags = tagger.tag(tokens);
    if (tags.size() != tokens.size()) {
        throw BackendError("tagger returned " + std::to_string(tags.size()) +
                           " tags for " + std::to_string(tokens.size()) + " tokens");
    }
    for (std::size_t i = 0; i < tokens.size(); ++i) tokens[i].pos = tags[i];
    return tokens;
}

std::vector<std::string> extract_noun_chunks(const std::vector<Token>& tagged) {
    std::vector<std::string> chunks;
    const std::size_t n = tagged.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        if (j < n && tagged[j].pos == Pos::DET) ++j;
        const std::size_t after_det = j;
        while (j < n && tagged[j].pos == Pos::ADJ) ++j;
        std::size_t noun_start = j;
        while (j < n && tagged[j].pos == Pos::NOUN) ++j;
        if (j == noun_start) {
            ++i;
            continue;
        }
        if (j < n && tagged[j].pos == Pos::NUM) ++j;
        std::string text;
        for (std::size_t k = after_det; k < j; ++k) {
            if (!text.empty()) text += ' ';
            text += tagged[k].text;
        }
        chunks.push_back(std::move(text));
        i = j;
    }
    return chunks;
}

std::vector<std::string> default_entity_blocklist() {
    return {"picture", "image", "photo", "scene", "side",
            "left",    "right", "top",   "bottom"};
}

const PosTagger& default_tagger() {
    static const RuleTagger tagger;
    return tagger;
}

EntityExtractor::EntityExtractor()
    : EntityExtractor(std::make_shared<RuleTagger>()) {}

EntityExtractor::EntityExtractor(std::shared_ptr<const PosTagger> tagger,
                                 std::vector<std::string> blocklist)
    : tagger_(std::move(tagger)) {
    for (std::string& word : blocklist) blocklist_.push_back(to_lower(std::move(word)));
}

std::vector<std::string> EntityExtractor::chunks(const std::string& question) const {
    return extract_noun_chunks(pos_tag(tokenize(question), *tagger_));
}

EntityPair EntityExtractor::extract_target_entities(const std::string& question) const {
    std::vector<std::string> surviving;
    for (const std::string& chunk : chunks(question)) {
        const std::string head = to_lower(head_noun(chunk, *tagger_));
        if (std::find(blocklist_.begin(), blocklist_.end(), head) != blocklist_.end()) {
            continue;
        }
        surviving.push_back(chunk);
    }

    EntityPair pair;
    std::set<std::string> picked;
    std::size_t distinct = 0;
    for (const std::string& chunk : surviving) {
        const std::string norm = to_lower(chunk);
        if (!picked.insert(norm).second) continue;
        ++distinct;
        if (pair.first.empty()) {
            pair.first = chunk;
        } else if (pair.second.empty()) {
            pair.second = chunk;
        }
    }
    if (distinct > 2) {
        log_warn("question yields " + std::to_string(distinct) +
                 " candidate entities, keeping the first two: \"" + question + "\"");
    }
    return pair;
}

std::string head_noun(const std::string& phrase, const PosTagger& tagger) {
    const std::vector<Token> tagged = pos_tag(tokenize(phrase), tagger);
    if (tagged.empty()) return "";
    for (auto it = tagged.rbegin(); it != tagged.rend(); ++it) {
        if (it->pos == Pos::NOUN) return it->text;
    }
    for (auto it = tagged.rbegin(); it != tagged.rend(); ++it) {
        if (it->pos != Pos::NUM) return it->text;
    }
    return tagged.back().text;
}

}  // namespace geval
