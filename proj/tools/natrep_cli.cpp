#include "natrep/bench.hpp"
#include "natrep/codec.hpp"
#include "natrep/surd.hpp"
#include "natrep/tree.hpp"
#include "natrep/words.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace natrep;

namespace {

constexpr const char *kUsage =
    "usage: natrep {encode|decode|cf|cf-eval|compare|tree|set|approx|bench} ...";

std::string order_symbol(Order o) {
    switch (o) {
    case Order::less:
        return "<";
    case Order::equal:
        return "=";
    case Order::greater:
        return ">";
    }
    return "?";
}

std::vector<unsigned> parse_list(const std::string &text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(static_cast<unsigned>(std::stoul(item)));
    return out;
}

void tree_dot(std::ostream &os, unsigned max_h) {
    os << "digraph {\n";
    for (unsigned h = 1; h < max_h; ++h)
        for (const NatRep &s : level(h))
            for (const Child &c : children(s))
                os << "  \"" << s.str() << "\" -> \"" << c.seq.str() << "\" [label=\""
                   << edge_label_str(c.label) << "\"];\n";
    os << "}\n";
}

void print_level(std::ostream &os, unsigned h) {
    auto lv = level(h);
    size_t wseq = 0, wval = 0;
    std::vector<std::string> seqs, vals;
    for (const NatRep &s : lv) {
        seqs.push_back(s.str());
        vals.push_back(decode(s).str());
        wseq = std::max(wseq, seqs.back().size());
        wval = std::max(wval, vals.back().size());
    }
    for (size_t i = 0; i < lv.size(); ++i)
        os << std::setw(5) << i << "  " << std::left << std::setw(static_cast<int>(wseq))
           << seqs[i] << "  " << std::setw(static_cast<int>(wval)) << vals[i] << std::right
           << "\n";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"natural representation toolkit"};
    app.require_subcommand(1);

    std::string ratio_text, seq_text, seq_text2, word_text, anchor_text = "-1/2";
    unsigned height_arg = 5, terms = 8;
    long sqrt_d = 2;
    std::string index_text;
    bool dot = false, trace = false, compare_flag = false;
    size_t max_steps = kDefaultMaxSteps;
    std::string codec_name = "natural", format_name = "csv", out_file;
    std::string fib_list = "5,10,20,30,40,50,60,70,80";
    std::uint64_t iterations = 10000000;

    auto *enc = app.add_subcommand("encode", "rational -> natural representation");
    enc->add_option("ratio", ratio_text)->required();

    auto *dec = app.add_subcommand("decode", "natural representation -> rational");
    dec->add_option("seq", seq_text)->required();

    auto *cf = app.add_subcommand("cf", "rational -> standard continued fraction");
    cf->add_option("ratio", ratio_text)->required();

    auto *cfe = app.add_subcommand("cf-eval", "standard continued fraction -> rational");
    cfe->add_option("seq", seq_text)->required();

    auto *cmp = app.add_subcommand("compare", "order two sequences");
    cmp->add_option("a", seq_text)->required();
    cmp->add_option("b", seq_text2)->required();

    auto *tree = app.add_subcommand("tree", "extended Stern-Brocot tree");
    tree->require_subcommand(1);
    auto *tlevel = tree->add_subcommand("level", "list one level");
    tlevel->add_option("height", height_arg)->required();
    tlevel->add_flag("--dot", dot);
    auto *tchildren = tree->add_subcommand("children", "children of a node");
    tchildren->add_option("seq", seq_text)->required();
    auto *troute = tree->add_subcommand("route", "edges from the root");
    troute->add_option("seq", seq_text)->required();
    auto *tnode = tree->add_subcommand("node", "node at (height, index)");
    tnode->add_option("height", height_arg)->required();
    tnode->add_option("index", index_text)->required();
    auto *tsym = tree->add_subcommand("symmetry", "anchored symmetry report");
    tsym->add_option("--anchor", anchor_text)->required();
    tsym->add_option("--height", height_arg)->required();

    auto *set = app.add_subcommand("set", "expression words and sets");
    set->require_subcommand(1);
    auto *slower = set->add_subcommand("lower", "word -> canonical set text");
    slower->add_option("word", word_text)->required();
    auto *seval = set->add_subcommand("eval", "word -> normal form");
    seval->add_option("word", word_text)->required();
    seval->add_flag("--trace", trace);
    seval->add_option("--max-steps", max_steps);
    auto *sdot = set->add_subcommand("dot", "word -> DOT of its set");
    sdot->add_option("word", word_text)->required();

    auto *approx = app.add_subcommand("approx", "digit streams for quadratic irrationals");
    approx->add_option("--sqrt", sqrt_d)->required();
    approx->add_option("--terms", terms);
    approx->add_option("--codec", codec_name)->check(CLI::IsMember({"natural", "standard"}));
    approx->add_flag("--compare", compare_flag);

    auto *bench = app.add_subcommand("bench", "fibonacci-ratio codec benchmark");
    bench->add_option("--fib", fib_list);
    bench->add_option("--iters", iterations);
    bench->add_option("--format", format_name)->check(CLI::IsMember({"csv", "json"}));
    bench->add_option("--out", out_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &) {
        std::cerr << kUsage << "\n";
        return 2;
    }

    try {
        if (*enc) {
            std::cout << encode(Ratio::parse(ratio_text)).str() << "\n";
        } else if (*dec) {
            std::cout << decode(NatRep::parse(seq_text)).str() << "\n";
        } else if (*cf) {
            NatRep view;
            view.entries = cf_encode(Ratio::parse(ratio_text));
            std::cout << view.str() << "\n";
        } else if (*cfe) {
            std::cout << cf_eval(NatRep::parse(seq_text).entries).str() << "\n";
        } else if (*cmp) {
            std::cout << order_symbol(compare(NatRep::parse(seq_text), NatRep::parse(seq_text2)))
                      << "\n";
        } else if (*tlevel) {
            if (dot)
                tree_dot(std::cout, height_arg);
            else
                print_level(std::cout, height_arg);
        } else if (*tchildren) {
            for (const Child &c : children(NatRep::parse(seq_text)))
                std::cout << c.seq.str() << "  " << edge_label_str(c.label) << "  "
                          << decode(c.seq).str() << "\n";
        } else if (*troute) {
            auto edges = route(NatRep::parse(seq_text));
            std::string out;
            for (size_t i = 0; i < edges.size(); ++i) {
                if (i)
                    out += ' ';
                out += edge_label_str(edges[i]);
            }
            std::cout << out << "\n";
        } else if (*tnode) {
            std::cout << node_at(height_arg, Int(index_text)).str() << "\n";
        } else if (*tsym) {
            auto anchor = parse_anchor(anchor_text);
            if (!anchor) {
                std::cerr << "usage: natrep tree symmetry --anchor {-2|-1|-1/2|0|1} --height H\n";
                return 2;
            }
            std::cout << symmetry_report_json(check_symmetry(*anchor, height_arg)) << "\n";
        } else if (*slower) {
            std::cout << lower(parse_word(word_text)).str() << "\n";
        } else if (*seval) {
            auto res = evaluate_traced(parse_word(word_text), max_steps, trace);
            if (trace)
                for (const std::string &line : res.trace)
                    std::cout << line << "\n";
            std::cout << word_str(res.normal_form) << "\n";
        } else if (*sdot) {
            std::cout << to_dot(lower(parse_word(word_text)));
        } else if (*approx) {
            Surd x = Surd::sqrt_of(sqrt_d);
            auto nat = nat_digits(x, terms);
            auto std_digits = cf_digits(x, compare_flag ? 2 * terms : terms);
            bool natural = codec_name == "natural";
            for (size_t k = 1; k <= terms; ++k) {
                std::vector<Int> prefix(nat.begin(), nat.begin() + k);
                std::vector<Int> cfp(std_digits.begin(),
                                     std_digits.begin() + std::min(std_digits.size(),
                                                                   compare_flag ? 2 * k : k));
                NatRep nview;
                nview.entries = natural || compare_flag ? prefix : cfp;
                auto conv = convergent_error(x, nview.entries,
                                             natural || compare_flag ? Codec::Natural
                                                                     : Codec::Standard);
                std::cout << k << "  " << nview.str() << "  " << conv.value.str() << "  err "
                          << conv.error.str();
                if (compare_flag) {
                    NatRep cview;
                    cview.entries = cfp;
                    auto cconv = convergent_error(x, cview.entries, Codec::Standard);
                    int cmp = conv.error.cmp(cconv.error);
                    std::cout << "  |  " << cview.str() << "  " << cconv.value.str() << "  err "
                              << cconv.error.str() << "  ["
                              << (cmp < 0 ? "natural ahead" : cmp == 0 ? "equal" : "standard ahead")
                              << "]";
                }
                std::cout << "\n";
            }
        } else if (*bench) {
            auto rows = run_suite(parse_list(fib_list), iterations);
            std::string text =
                emit(rows, format_name == "csv" ? BenchFormat::Csv : BenchFormat::Json);
            if (format_name == "csv")
                std::cerr << "# " << build_metadata() << "\n";
            if (!out_file.empty()) {
                std::ofstream f(out_file);
                f << text;
            } else {
                std::cout << text;
            }
        }
    } catch (const nonterminating_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const std::string &line : e.trace_tail)
            std::cerr << "  " << line << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
