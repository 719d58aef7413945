// Command-line front end: encode, decode, verify, stats, census, render.
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "schroeder/cli.hpp"

namespace {

std::string read_all_stdin() {
    std::string text, line;
    while (std::getline(std::cin, line)) {
        text += line;
        text += '\n';
    }
    return text;
}

std::string read_first_line_stdin() {
    std::string line;
    std::getline(std::cin, line);
    return line;
}

schroeder::OutputFormat to_format(const std::string& name) {
    return name == "json" ? schroeder::OutputFormat::Json
                          : schroeder::OutputFormat::Text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bijection between {4132,4231}-avoiding permutations on [0,n] "
                 "and Schroeder n-paths, with statistics, censuses, exhaustive "
                 "verification, and path rendering"};
    app.require_subcommand(1);

    int exit_code = 0;

    auto* encode = app.add_subcommand(
        "encode", "map a permutation to its Schroeder path word and statistics");
    std::string encode_input, encode_format = "text";
    encode->add_option("permutation", encode_input,
                       "permutation of {0..n}, whitespace-separated (default: stdin)");
    encode->add_option("--format", encode_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    encode->callback([&] {
        std::string input =
            encode->count("permutation") ? encode_input : read_all_stdin();
        exit_code = schroeder::run_encode(input, to_format(encode_format), std::cout,
                                          std::cerr);
    });

    auto* decode = app.add_subcommand(
        "decode", "map a Schroeder path word back to its permutation");
    std::string decode_input, decode_format = "text";
    decode->add_option("word", decode_input,
                       "path word over N/D/E (default: first line of stdin)");
    decode->add_option("--format", decode_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    decode->callback([&] {
        std::string input =
            decode->count("word") ? decode_input : read_first_line_stdin();
        exit_code = schroeder::run_decode(input, to_format(decode_format), std::cout,
                                          std::cerr);
    });

    auto* verify = app.add_subcommand(
        "verify", "run the exhaustive invariant suites for n = 0..n_max");
    int n_max = 5;
    std::string verify_format = "text";
    verify->add_option("--n-max", n_max, "largest size to cover (<= 8)")
        ->check(CLI::Range(0, schroeder::kMaxVerifyN));
    verify->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    verify->callback([&] {
        exit_code =
            schroeder::run_verify(n_max, to_format(verify_format), std::cout, std::cerr);
    });

    auto* stats = app.add_subcommand(
        "stats", "area and coinversion histograms side by side");
    int stats_n = 0;
    std::string stats_format = "text";
    stats->add_option("--n", stats_n, "path size / permutation length - 1")
        ->required()
        ->check(CLI::Range(0, schroeder::kMaxCensusN));
    stats->add_option("--format", stats_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    stats->callback([&] {
        exit_code =
            schroeder::run_stats(stats_n, to_format(stats_format), std::cout, std::cerr);
    });

    auto* census = app.add_subcommand(
        "census", "list every {4132,4231}-avoider on [0,n], one per line");
    int census_n = 0;
    std::string census_format = "text";
    census->add_option("--n", census_n, "permutation length - 1")
        ->required()
        ->check(CLI::Range(0, schroeder::kMaxCensusN));
    census->add_option("--format", census_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    census->callback([&] {
        exit_code = schroeder::run_census(census_n, to_format(census_format), std::cout,
                                          std::cerr);
    });

    auto* render = app.add_subcommand("render", "draw a path as ascii art or svg");
    std::string render_input, render_format = "ascii", render_output;
    schroeder::RenderSpec spec;
    render->add_option("word", render_input,
                       "path word over N/D/E (default: first line of stdin)");
    render->add_option("--format", render_format, "drawing format")
        ->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("--svg-cell-size", spec.cell_size, "svg pixels per unit cell")
        ->check(CLI::PositiveNumber);
    render->add_flag("--shade", spec.shade_area,
                     "shade the cells left of the path (svg)");
    render->add_option("--output", render_output, "write to a file instead of stdout");
    render->callback([&] {
        spec.format = render_format == "svg" ? schroeder::RenderSpec::Format::Svg
                                             : schroeder::RenderSpec::Format::Ascii;
        std::string input =
            render->count("word") ? render_input : read_first_line_stdin();
        if (render_output.empty()) {
            exit_code = schroeder::run_render(input, spec, std::cout, std::cerr);
        } else {
            std::ofstream file(render_output);
            if (!file) {
                std::cerr << "error: cannot open '" << render_output << "'\n";
                exit_code = 2;
                return;
            }
            exit_code = schroeder::run_render(input, spec, file, std::cerr);
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return exit_code;
}
