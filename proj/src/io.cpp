#include <netform/io.hpp>

#include <fstream>
#include <sstream>

namespace netform
{
    ParseError::ParseError(const std::string & src, int ln, const std::string & message) :
        std::runtime_error(src + (ln > 0 ? ":" + std::to_string(ln) : std::string{}) + ": " + message),
        source(src),
        line(ln)
    {
    }

    namespace
    {
        auto is_blank(const std::string & text) -> bool
        {
            return text.find_first_not_of(" \t\r") == std::string::npos;
        }

        auto parse_pair(const std::string & text, int n, const std::string & source, int line) -> NodePair
        {
            std::istringstream fields(text);
            long long i, j;
            std::string rest;
            if (! (fields >> i >> j) || (fields >> rest))
                throw ParseError{source, line, "expected two node ids \"i j\", got \"" + text + "\""};
            if (i < 0 || j < 0 || i >= n || j >= n)
                throw ParseError{source, line, "node id out of range [0, " + std::to_string(n - 1) + "]"};
            if (i == j)
                throw ParseError{source, line, "self-loop " + std::to_string(i) + " " + std::to_string(j)};
            return {static_cast<int>(i), static_cast<int>(j)};
        }

        auto open(const std::filesystem::path & path) -> std::ifstream
        {
            std::ifstream in(path);
            if (! in)
                throw ParseError{path.string(), 0, "cannot open file"};
            return in;
        }
    }

    auto read_edge_list(std::istream & in, int n, const std::string & source) -> Network
    {
        Network result(n);
        std::string text;
        for (int line = 1 ; std::getline(in, text) ; ++line) {
            if (is_blank(text))
                continue;
            auto [i, j] = parse_pair(text, n, source, line);
            if (i > j)
                throw ParseError{source, line, "edge must be written with the smaller id first"};
            if (result.has_edge(i, j))
                throw ParseError{source, line, "duplicate edge " + std::to_string(i) + " " + std::to_string(j)};
            result.add_edge(i, j);
        }
        return result;
    }

    auto read_edge_list_file(const std::filesystem::path & path, int n) -> Network
    {
        auto in = open(path);
        return read_edge_list(in, n, path.string());
    }

    void write_edge_list(std::ostream & out, const Network & network)
    {
        for (auto [i, j] : network.edges())
            out << i << ' ' << j << '\n';
    }

    void write_edge_list_file(const std::filesystem::path & path, const Network & network)
    {
        std::ofstream out(path);
        if (! out)
            throw std::runtime_error{"cannot write " + path.string()};
        write_edge_list(out, network);
    }

    auto read_pair_script(std::istream & in, int n, const std::string & source) -> std::vector<NodePair>
    {
        std::vector<NodePair> result;
        std::string text;
        for (int line = 1 ; std::getline(in, text) ; ++line)
            if (! is_blank(text))
                result.push_back(parse_pair(text, n, source, line));
        return result;
    }

    auto read_pair_script_file(const std::filesystem::path & path, int n) -> std::vector<NodePair>
    {
        auto in = open(path);
        return read_pair_script(in, n, path.string());
    }
}
