#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

#include "spanhyper/hypergraph.hpp"

namespace spanhyper {

namespace {

// Splits a line into whitespace-separated integer tokens; rejects junk.
bool parse_ints(const std::string& line, std::vector<long long>& out, int line_no) {
    out.clear();
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok[0] == '#') return true;  // trailing comment
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("expected integer, got '" + tok + "'", line_no);
        }
        if (pos != tok.size()) throw ParseError("expected integer, got '" + tok + "'", line_no);
        out.push_back(v);
    }
    return !out.empty();
}

}  // namespace

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int r = 0, n = 0;
    long long m = -1;
    std::vector<long long> nums;
    int header_line = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (!parse_ints(line, nums, line_no)) continue;
        if (nums.size() != 3) throw ParseError("header must be 'r n m'", line_no);
        r = static_cast<int>(nums[0]);
        n = static_cast<int>(nums[1]);
        m = nums[2];
        header_line = line_no;
        break;
    }
    if (m < 0) throw ParseError("missing 'r n m' header", line_no == 0 ? 1 : line_no);
    if (r < 2) throw ParseError("uniformity r must be at least 2", header_line);
    if (n < 1) throw ParseError("vertex count n must be at least 1", header_line);
    if (m < 0) throw ParseError("negative edge count", header_line);

    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(m) * r);
    std::set<std::vector<int>> dedup;
    std::vector<int> cur(r);
    long long seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (!parse_ints(line, nums, line_no)) continue;
        if (seen == m) throw ParseError("more edge lines than the declared " + std::to_string(m), line_no);
        if (static_cast<int>(nums.size()) != r)
            throw ParseError("edge has " + std::to_string(nums.size()) + " vertices, expected " + std::to_string(r), line_no);
        for (int j = 0; j < r; ++j) {
            if (nums[j] < 1 || nums[j] > n)
                throw ParseError("vertex " + std::to_string(nums[j]) + " outside 1.." + std::to_string(n), line_no);
            if (j > 0 && nums[j] <= nums[j - 1])
                throw ParseError("vertex ids must be strictly increasing", line_no);
            cur[j] = static_cast<int>(nums[j]);
        }
        if (!dedup.insert(cur).second) throw ParseError("duplicate edge", line_no);
        flat.insert(flat.end(), cur.begin(), cur.end());
        ++seen;
    }
    if (seen != m)
        throw ParseError("declared " + std::to_string(m) + " edges but found " + std::to_string(seen), line_no == 0 ? 1 : line_no);
    try {
        return Hypergraph(r, n, std::move(flat));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), header_line);
    }
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + ": " + std::strerror(errno));
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_hypergraph(ss.str());
}

std::string format_hypergraph(const Hypergraph& h, const std::vector<std::string>& comment_lines) {
    std::ostringstream out;
    for (const auto& c : comment_lines) out << "# " << c << "\n";
    out << h.r() << " " << h.n() << " " << h.edge_count() << "\n";
    for (int i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
        out << "\n";
    }
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp + ": " + std::strerror(errno));
        f << content;
        f.flush();
        if (!f) throw std::runtime_error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("rename to " + path + " failed: " + std::strerror(errno));
    }
}

}  // namespace spanhyper
