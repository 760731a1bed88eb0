#include "trilink/tables.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "trilink/bouquet.hpp"
#include "trilink/gauss_code.hpp"

namespace trilink {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing transcription file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string cell(const std::array<long long, 3>& t) {
    if (t[0] == t[1] && t[1] == t[2]) return std::to_string(t[0]);
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
           std::to_string(t[2]) + ")";
}

}  // namespace

std::map<std::string, std::string> compute_tables(const invariant_context& ctx,
                                                  const std::string& data_dir) {
    std::map<std::string, std::string> out;

    gauss_diagram b = compile_bouquet(parse_bouquet(read_file(data_dir + "/bouquet_b.txt")));
    gauss_diagram bm =
        compile_bouquet(parse_bouquet(read_file(data_dir + "/bouquet_b_mirror.txt")));
    invariant_report rb = compute_report(ctx, b);
    invariant_report rm = compute_report(ctx, bm);

    {
        std::ostringstream t;
        t << "quantity      b       b_mir\n";
        t << "mu123         " << rb.mu123.raw.str() << "    " << rm.mu123.raw.str() << "\n";
        t << "p_hat         " << rb.phat.str() << "    " << rm.phat.str() << "\n";
        t << "p1            " << rb.P1 << "      " << rm.P1 << "\n";
        t << "p2            " << rb.P2 << "      " << rm.P2 << "\n";
        out["bouquet_values.txt"] = t.str();
    }
    {
        std::ostringstream t;
        t << "quantity      b       b_mir\n";
        for (int n = 1; n <= 3; ++n)
            t << "q_id_" << n << "        " << rb.q.at("id")[n - 1] << "      "
              << rm.q.at("id")[n - 1] << "\n";
        out["bouquet_q.txt"] = t.str();
    }

    std::vector<invariant_report> kr;
    for (int r = 1; r <= 6; ++r) {
        gauss_diagram k =
            parse_gauss_code(read_file(data_dir + "/k" + std::to_string(r) + ".txt"));
        kr.push_back(compute_report(ctx, k));
    }
    {
        std::ostringstream t;
        t << "sigma    k1      k2      k3      k4      k5      k6\n";
        t << "mu_res  ";
        for (const invariant_report& r : kr) {
            if (r.mu123.modulus > 0)
                t << " " << r.mu123.residue << " (mod " << r.mu123.modulus << ")";
            else
                t << " " << r.mu123.raw.str();
        }
        t << "\n";
        for (const permutation& s : s3()) {
            t << s.name();
            for (size_t pad = s.name().size(); pad < 8; ++pad) t << ' ';
            for (const invariant_report& r : kr) {
                std::string c = cell(r.q.at(s.name()));
                t << c;
                for (size_t pad = c.size(); pad < 8; ++pad) t << ' ';
            }
            t << "\n";
        }
        out["k_family_q.txt"] = t.str();
    }
    {
        gauss_diagram k1d = parse_gauss_code(read_file(data_dir + "/k1.txt"));
        invariant_value mu = kr[0].mu123;
        invariant_value r1 = p1_reduced(ctx, k1d);
        invariant_value r2 = p2_reduced(ctx, k1d);
        std::ostringstream t;
        t << "k1 residues\n";
        t << "mu123 mod gcd(lk)      = " << mu.residue << " (mod " << mu.modulus << ")\n";
        t << "p1    mod gcd(2lk)     = " << r1.residue << " (mod " << r1.modulus << ")\n";
        t << "p2    mod gcd(2lk)     = " << r2.residue << " (mod " << r2.modulus << ")\n";
        out["k1_reduced.txt"] = t.str();
    }
    return out;
}

std::string diff_against_golden(const invariant_context& ctx, const std::string& data_dir) {
    auto tables = compute_tables(ctx, data_dir);
    std::ostringstream diff;
    for (const auto& [name, content] : tables) {
        std::string golden_path = data_dir + "/golden/" + name;
        std::ifstream in(golden_path);
        if (!in) {
            diff << "missing golden file: " << golden_path << "\n";
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        if (buf.str() != content) {
            diff << "table " << name << " differs from golden:\n";
            std::istringstream got(content), want(buf.str());
            std::string lg, lw;
            int line = 0;
            while (true) {
                bool has_g = static_cast<bool>(std::getline(got, lg));
                bool has_w = static_cast<bool>(std::getline(want, lw));
                ++line;
                if (!has_g && !has_w) break;
                if (!has_g) lg = "<missing>";
                if (!has_w) lw = "<missing>";
                if (lg != lw)
                    diff << "  line " << line << ": recomputed '" << lg << "' vs golden '"
                         << lw << "'\n";
            }
        }
    }
    return diff.str();
}

}  // namespace trilink
