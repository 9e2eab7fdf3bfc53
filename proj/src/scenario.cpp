#include <netform/io.hpp>
#include <netform/scenario.hpp>

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace netform
{
    auto Scenario::partition() const -> GroupPartition
    {
        return GroupPartition::from_sizes(group_sizes);
    }

    auto Scenario::society() const -> Society
    {
        auto p = partition();
        auto f = CoordinationMatrix::from_upper(p.group_count(), coordination);
        return Society{std::move(p), std::move(f), params()};
    }

    auto Scenario::search_space() const -> SearchSpace
    {
        if (space == SearchSpace::Kind::Full)
            return SearchSpace::full(partition().node_count(), max_full_n);
        return SearchSpace::interconnection(partition(), max_free_pairs);
    }

    void Scenario::validate() const
    {
        if (group_sizes.empty())
            throw InvalidModel{"scenario has no groups"};
        (void) society();
        if (max_steps < 1)
            throw InvalidModel{"max_steps must be at least 1"};
    }

    auto parse_space(const std::string & text) -> SearchSpace::Kind
    {
        if (text == "full")
            return SearchSpace::Kind::Full;
        if (text == "inter")
            return SearchSpace::Kind::Interconnection;
        throw InvalidModel{"space must be \"full\" or \"inter\", got \"" + text + "\""};
    }

    namespace
    {
        auto trim(const std::string & text) -> std::string
        {
            auto b = text.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return {};
            auto e = text.find_last_not_of(" \t\r");
            return text.substr(b, e - b + 1);
        }

        template <typename T_>
        auto parse_list(const std::string & value, const std::string & source, int line, const std::string & key) -> std::vector<T_>
        {
            std::istringstream fields(value);
            std::vector<T_> result;
            std::string token;
            while (fields >> token) {
                std::istringstream one(token);
                T_ v;
                std::string rest;
                if (! (one >> v) || (one >> rest))
                    throw ParseError{source, line, "bad value \"" + token + "\" for " + key};
                result.push_back(v);
            }
            return result;
        }

        template <typename T_>
        auto parse_one(const std::string & value, const std::string & source, int line, const std::string & key) -> T_
        {
            auto list = parse_list<T_>(value, source, line, key);
            if (list.size() != 1)
                throw ParseError{source, line, key + " takes exactly one value"};
            return list.front();
        }
    }

    auto parse_scenario(std::istream & in, const std::string & source) -> Scenario
    {
        Scenario result;
        std::map<std::string, int> seen;
        std::string text;
        for (int line = 1 ; std::getline(in, text) ; ++line) {
            if (auto hash = text.find('#') ; hash != std::string::npos)
                text.erase(hash);
            text = trim(text);
            if (text.empty())
                continue;
            auto eq = text.find('=');
            if (eq == std::string::npos)
                throw ParseError{source, line, "expected \"key = value\""};
            auto key = trim(text.substr(0, eq)), value = trim(text.substr(eq + 1));
            if (seen.contains(key))
                throw ParseError{source, line, "duplicate key " + key + " (first on line " + std::to_string(seen[key]) + ")"};
            seen[key] = line;

            if (key == "group_sizes")
                result.group_sizes = parse_list<int>(value, source, line, key);
            else if (key == "F")
                result.coordination = parse_list<double>(value, source, line, key);
            else if (key == "delta")
                result.delta = parse_one<double>(value, source, line, key);
            else if (key == "cost")
                result.cost = parse_one<double>(value, source, line, key);
            else if (key == "epsilon")
                result.epsilon = parse_one<double>(value, source, line, key);
            else if (key == "seed")
                result.seed = parse_one<std::uint64_t>(value, source, line, key);
            else if (key == "space") {
                try {
                    result.space = parse_space(value);
                }
                catch (const InvalidModel & e) {
                    throw ParseError{source, line, e.what()};
                }
            }
            else if (key == "max_full_n")
                result.max_full_n = parse_one<int>(value, source, line, key);
            else if (key == "max_free_pairs")
                result.max_free_pairs = parse_one<int>(value, source, line, key);
            else if (key == "max_steps")
                result.max_steps = parse_one<std::size_t>(value, source, line, key);
            else if (key == "convergence_window")
                result.convergence_window = parse_one<std::size_t>(value, source, line, key);
            else
                throw ParseError{source, line, "unknown key \"" + key + "\""};
        }

        for (const char * required : {"group_sizes", "delta", "cost"})
            if (! seen.contains(required))
                throw ParseError{source, 0, std::string{"missing required key "} + required};
        if (result.group_sizes.size() > 1 && ! seen.contains("F"))
            throw ParseError{source, 0, "missing required key F"};

        try {
            result.validate();
        }
        catch (const InvalidModel & e) {
            throw InvalidModel{source + ": " + e.what()};
        }
        return result;
    }

    auto load_scenario(const std::filesystem::path & path) -> Scenario
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError{path.string(), 0, "cannot open file"};
        return parse_scenario(in, path.string());
    }

    void write_scenario(std::ostream & out, const Scenario & s)
    {
        auto old = out.precision(17);
        out << "group_sizes =";
        for (int v : s.group_sizes)
            out << ' ' << v;
        out << "\nF =";
        for (double v : s.coordination)
            out << ' ' << v;
        out << "\ndelta = " << s.delta << "\ncost = " << s.cost << "\nepsilon = " << s.epsilon << '\n';
        if (s.seed)
            out << "seed = " << *s.seed << '\n';
        out << "space = " << (s.space == SearchSpace::Kind::Full ? "full" : "inter") << '\n'
            << "max_full_n = " << s.max_full_n << "\nmax_free_pairs = " << s.max_free_pairs << '\n'
            << "max_steps = " << s.max_steps << "\nconvergence_window = " << s.convergence_window << '\n';
        out.precision(old);
    }
}
