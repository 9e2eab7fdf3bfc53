#pragma once

#include <netform/network.hpp>

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace netform
{
    class ParseError : public std::runtime_error
    {
        public:
            ParseError(const std::string & source, int line, const std::string & message);

            std::string source;
            int line;  ///< 1-based; 0 when the error is not tied to a line
    };

    /// Edge-list text: one "i j" per line, 0-based ids, i < j, no duplicates.
    /// Blank lines are ignored.
    auto read_edge_list(std::istream & in, int n, const std::string & source = "<edges>") -> Network;
    auto read_edge_list_file(const std::filesystem::path & path, int n) -> Network;

    /// Writes edges in lexicographic order, one "i j" per line.
    void write_edge_list(std::ostream & out, const Network & network);
    void write_edge_list_file(const std::filesystem::path & path, const Network & network);

    /// Pair script: one "i j" per line, i != j, either order.
    auto read_pair_script(std::istream & in, int n, const std::string & source = "<script>") -> std::vector<NodePair>;
    auto read_pair_script_file(const std::filesystem::path & path, int n) -> std::vector<NodePair>;
}
