#include "momo/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace momo {

bool Bounds::contains(const DecisionVector& x) const {
    if (x.size() != lower.size()) {
        return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= lower[i] && x[i] <= upper[i])) {
            return false;
        }
    }
    return true;
}

void Bounds::validate() const {
    if (lower.size() != upper.size() || lower.empty()) {
        throw std::invalid_argument("bounds: lower/upper size mismatch or empty");
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (!(lower[i] < upper[i])) {
            throw std::invalid_argument("bounds: lower must be < upper in every dimension");
        }
    }
}

std::vector<DecisionVector> Archive::decisions() const {
    std::vector<DecisionVector> out;
    out.reserve(entries_.size());
    for (const auto& s : entries_) {
        out.push_back(s.x);
    }
    return out;
}

std::vector<ObjectiveVector> Archive::objectives() const {
    std::vector<ObjectiveVector> out;
    out.reserve(entries_.size());
    for (const auto& s : entries_) {
        out.push_back(s.f);
    }
    return out;
}

void Archive::write_csv(std::ostream& out) const {
    const std::size_t d = entries_.empty() ? 0 : entries_.front().x.size();
    const std::size_t m = entries_.empty() ? 0 : entries_.front().f.size();
    out << "eval_index";
    for (std::size_t i = 1; i <= d; ++i) {
        out << ",x_" << i;
    }
    for (std::size_t i = 1; i <= m; ++i) {
        out << ",f_" << i;
    }
    out << '\n';
    for (const auto& s : entries_) {
        out << s.eval_index;
        for (double v : s.x) {
            out << ',' << format_double(v);
        }
        for (double v : s.f) {
            out << ',' << format_double(v);
        }
        out << '\n';
    }
}

void Archive::write_csv(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    write_csv(out);
}

Archive Archive::read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("archive csv: missing header");
    }
    const auto header = split(trim(line), ',');
    if (header.empty() || header.front() != "eval_index") {
        throw std::runtime_error("archive csv: header must start with eval_index");
    }
    std::size_t d = 0;
    std::size_t m = 0;
    for (std::size_t i = 1; i < header.size(); ++i) {
        if (header[i].starts_with("x_")) {
            ++d;
        } else if (header[i].starts_with("f_")) {
            ++m;
        } else {
            throw std::runtime_error("archive csv: unexpected column " + header[i]);
        }
    }
    Archive archive;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto cells = split(line, ',');
        if (cells.size() != 1 + d + m) {
            throw std::runtime_error("archive csv: wrong column count");
        }
        Solution s;
        s.eval_index = parse_uint(cells[0]);
        for (std::size_t i = 0; i < d; ++i) {
            s.x.push_back(parse_double(cells[1 + i]));
        }
        for (std::size_t i = 0; i < m; ++i) {
            s.f.push_back(parse_double(cells[1 + d + i]));
        }
        archive.append(s);
    }
    return archive;
}

Archive Archive::read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    return read_csv(in);
}

void RunConfig::validate() const {
    if (population_size < 4) {
        throw std::invalid_argument("config: population_size must be >= 4");
    }
    if (nfe_max < population_size) {
        throw std::invalid_argument("config: nfe_max must be >= population_size");
    }
    if (!(pc >= 0.0 && pc <= 1.0)) {
        throw std::invalid_argument("config: pc must lie in [0,1]");
    }
    if (pm && !(*pm >= 0.0 && *pm <= 1.0)) {
        throw std::invalid_argument("config: pm must lie in [0,1]");
    }
    if (!(eta_c > 0.0) || !(eta_m > 0.0)) {
        throw std::invalid_argument("config: distribution indices must be > 0");
    }
    for (double f : snapshot_fractions) {
        if (!(f > 0.0 && f <= 1.0)) {
            throw std::invalid_argument("config: snapshot fractions must lie in (0,1]");
        }
    }
}

bool RunConfig::apply(const std::string& key, const std::string& value) {
    if (key == "population_size" || key == "N") {
        population_size = parse_uint(value);
    } else if (key == "nfe_max") {
        nfe_max = parse_uint(value);
    } else if (key == "pc") {
        pc = parse_double(value);
    } else if (key == "eta_c") {
        eta_c = parse_double(value);
    } else if (key == "pm") {
        if (value == "1/D" || value == "auto") {
            pm.reset();
        } else {
            pm = parse_double(value);
        }
    } else if (key == "eta_m") {
        eta_m = parse_double(value);
    } else if (key == "seed") {
        seed = parse_uint(value);
    } else if (key == "snapshot_fractions") {
        snapshot_fractions.clear();
        for (const auto& part : split(value, ',')) {
            const auto t = trim(part);
            if (!t.empty()) {
                snapshot_fractions.push_back(parse_double(t));
            }
        }
    } else {
        return false;
    }
    return true;
}

RunConfig RunConfig::parse(std::istream& in) {
    RunConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        }
        const auto key = trim(std::string_view(line).substr(0, eq));
        const auto value = trim(std::string_view(line).substr(eq + 1));
        if (!cfg.apply(key, value)) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read config " + path.string());
    }
    return parse(in);
}

void RunConfig::write(std::ostream& out) const {
    out << "population_size = " << population_size << '\n';
    out << "nfe_max = " << nfe_max << '\n';
    out << "pc = " << format_double(pc) << '\n';
    out << "eta_c = " << format_double(eta_c) << '\n';
    out << "pm = " << (pm ? format_double(*pm) : std::string("1/D")) << '\n';
    out << "eta_m = " << format_double(eta_m) << '\n';
    out << "seed = " << seed << '\n';
    out << "snapshot_fractions = ";
    for (std::size_t i = 0; i < snapshot_fractions.size(); ++i) {
        out << (i ? "," : "") << format_double(snapshot_fractions[i]);
    }
    out << '\n';
}

void ClusterTracker::update(std::size_t k_star) {
    if (k_star < 2) {
        throw std::invalid_argument("cluster tracker: k* must be >= 2");
    }
    history_.push_back(k_star);
    sum_ += k_star;
    // ceil(sum / n) in integers, exact.
    k_bar_ = (sum_ + history_.size() - 1) / history_.size();
}

ClusterTracker update_tracker(ClusterTracker tracker, std::size_t k_star) {
    tracker.update(k_star);
    return tracker;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_double failed");
    }
    return std::string(buf, ptr);
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char delim) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(delim, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            break;
        }
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

double parse_double(const std::string& s) {
    const auto t = trim(s);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    return v;
}

std::uint64_t parse_uint(const std::string& s) {
    const auto t = trim(s);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw std::invalid_argument("not a non-negative integer: '" + s + "'");
    }
    return v;
}

}  // namespace momo
