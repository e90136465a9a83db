#include "gapped/io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace gapped {

InputFormat parse_input_format(std::string_view name) {
    if (name == "bytes") return InputFormat::Bytes;
    if (name == "ints") return InputFormat::Ints;
    throw std::invalid_argument("unknown input format '" + std::string(name) + "'");
}

Word parse_word(std::string_view data, InputFormat format) {
    if (format == InputFormat::Bytes) return Word::from_bytes(data);
    std::vector<std::int64_t> values;
    std::size_t i = 0;
    while (i < data.size()) {
        while (i < data.size() && std::isspace(static_cast<unsigned char>(data[i]))) ++i;
        if (i == data.size()) break;
        std::size_t j = i;
        while (j < data.size() && !std::isspace(static_cast<unsigned char>(data[j]))) ++j;
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(data.data() + i, data.data() + j, v);
        if (ec != std::errc{} || p != data.data() + j) {
            throw std::invalid_argument("bad integer '" + std::string(data.substr(i, j - i)) + "'");
        }
        values.push_back(v);
        i = j;
    }
    return Word::from_ints(values);
}

Word read_word(std::istream& in, InputFormat format) {
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw std::runtime_error("failed to read input");
    return parse_word(data, format);
}

Word read_word_file(const std::string& path, InputFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_word(in, format);
}

namespace {

template <class Record>
std::string tsv(const std::vector<Record>& items) {
    std::string out;
    out.reserve(items.size() * 16);
    char buf[64];
    for (const auto& r : items) {
        const std::int64_t fields[3] = {r.b_left, r.arm, r.gap()};
        for (int f = 0; f < 3; ++f) {
            auto [p, ec] = std::to_chars(buf, buf + sizeof buf, fields[f]);
            out.append(buf, p);
            out.push_back(f < 2 ? '\t' : '\n');
        }
    }
    return out;
}

}  // namespace

std::string format_tsv(const std::vector<GappedRepeat>& items) { return tsv(items); }
std::string format_tsv(const std::vector<GappedPalindrome>& items) { return tsv(items); }

std::string format_rational(const Rational& r) {
    using boost::multiprecision::cpp_int;
    const bool neg = r < 0;
    const Rational a = neg ? Rational(-r) : r;
    const cpp_int scale = 1000000;
    const cpp_int num = boost::multiprecision::numerator(a);
    const cpp_int den = boost::multiprecision::denominator(a);
    cpp_int scaled = (num * scale * 2 + den) / (den * 2);  // round half up
    const cpp_int whole = scaled / scale;
    cpp_int frac = scaled % scale;
    std::string f = frac.str();
    f.insert(f.begin(), 6 - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    std::string s = (neg ? "-" : "") + whole.str();
    if (!f.empty()) s += "." + f;
    return s;
}

}  // namespace gapped
