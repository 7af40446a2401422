#include "testscan/metrics.hpp"

#include "testscan/lexscan.hpp"

#include <doctest.h>

#include <algorithm>

using namespace testscan;
using metrics::FileMetrics;

namespace {

FileMetrics extract(const std::string& path, const std::string& content) {
    const auto rec = lex::SourceFileRecord::from_content(path, content);
    return metrics::extract_metrics(rec, {});
}

const metrics::MethodInfo* method(const FileMetrics& m, const std::string& name) {
    const auto it = std::find_if(m.methods.begin(), m.methods.end(),
                                 [&](const auto& mi) { return mi.name == name; });
    return it == m.methods.end() ? nullptr : &*it;
}

} // namespace

TEST_CASE("annotated public methods are counted") {
    const auto m = extract("A.java",
                           "import org.junit.Test;\n"
                           "public class A {\n"
                           "  @Test public void a() { run(); }\n"
                           "  @Test public void b() {}\n"
                           "  @Test\n  public void c() {}\n"
                           "}\n");
    CHECK(m.annotation_test_count == 3);
    CHECK(m.public_method_count == 3);
    CHECK(m.method_count == 3);
    CHECK(!m.has_main);
    CHECK(!m.degraded);
}

TEST_CASE("main-only file") {
    const auto m = extract("Tool.java",
                           "public class Tool {\n"
                           "  public static void main(String[] args) {}\n"
                           "}\n");
    CHECK(m.has_main);
    CHECK(m.annotation_test_count == 0);
    CHECK(m.prefix_method_count == 0);
    CHECK(m.suffix_method_count == 0);
    CHECK(m.public_method_count == 1);
}

TEST_CASE("main needs the exact modifier set, any order") {
    CHECK(extract("A.java", "class A { static public void main(String[] a) {} }").has_main);
    CHECK(!extract("A.java", "class A { public void main(String[] a) {} }").has_main);
    CHECK(!extract("A.java", "class A { public static int main(String[] a) { return 0; } }")
               .has_main);
    CHECK(!extract("A.java", "class A { static void main(String[] a) {} }").has_main);
}

TEST_CASE("dollar classes are flagged from the filename") {
    CHECK(extract("Outer$1.java", "class Outer$1 {}").dollar_class);
    CHECK(!extract("Outer.java", "class Outer {}").dollar_class);
    CHECK(extract("p/q/Gen$Impl.java", "class Gen$Impl {}").dollar_class);
}

TEST_CASE("prefix and suffix use word segmentation, not raw substrings") {
    const auto m = extract("A.java",
                           "class A {\n"
                           "  public void testAll() {}\n"
                           "  public void testsAll() {}\n"
                           "  public void testimony() {}\n"
                           "  public void test_util() {}\n"
                           "  public void allTest() {}\n"
                           "  public void latest() {}\n"
                           "  public void fooTEST() {}\n"
                           "}\n");
    CHECK(m.prefix_method_count == 2); // testAll, test_util
    CHECK(m.suffix_method_count == 2); // allTest, fooTEST
    const auto* t = method(m, "testAll");
    REQUIRE(t != nullptr);
    CHECK(t->test_prefix);
    CHECK(!t->test_suffix);
}

TEST_CASE("annotations on classes are not method annotations") {
    const auto m = extract("A.java",
                           "@Test\n"
                           "class A {\n"
                           "  public void helper() {}\n"
                           "}\n");
    CHECK(m.annotation_test_count == 0);
    CHECK(m.class_level_test_annotation);
}

TEST_CASE("annotation forms: args, qualified, unrelated") {
    const auto m = extract("A.java",
                           "class A {\n"
                           "  @Test(timeout = 500) public void slow() {}\n"
                           "  @org.junit.Test public void qualified() {}\n"
                           "  @TestFactory public void factory() {}\n"
                           "  @Override public String toString() { return \"\"; }\n"
                           "}\n");
    CHECK(m.annotation_test_count == 2);
    CHECK(m.method_count == 4);
}

TEST_CASE("comments and literals never produce methods or annotations") {
    const auto m = extract("A.java",
                           "class A {\n"
                           "  // @Test public void ghost() {}\n"
                           "  /* public void phantom() {} */\n"
                           "  String s = \"@Test void fake() {}\";\n"
                           "  public void real() {}\n"
                           "}\n");
    CHECK(m.annotation_test_count == 0);
    CHECK(m.method_count == 1);
    CHECK(m.methods[0].name == "real");
}

TEST_CASE("constructors are recognized but not counted as methods") {
    const auto m = extract("Foo.java",
                           "class Foo {\n"
                           "  public Foo() { setup(); }\n"
                           "  public Foo(int x) {}\n"
                           "  public void work() {}\n"
                           "}\n");
    CHECK(m.method_count == 1);
    CHECK(m.public_method_count == 1);
    const auto* ctor = method(m, "Foo");
    REQUIRE(ctor != nullptr);
    CHECK(ctor->is_constructor);
}

TEST_CASE("calls are attributed to the enclosing method") {
    const auto m = extract("A.java",
                           "class A {\n"
                           "  public void testEcho() { ping(); }\n"
                           "  public void testA4JRedirect() {\n"
                           "    testEcho();\n"
                           "    navigate(\"x\");\n"
                           "  }\n"
                           "}\n");
    const auto* redirect = method(m, "testA4JRedirect");
    REQUIRE(redirect != nullptr);
    CHECK(std::count(redirect->called_idents.begin(), redirect->called_idents.end(),
                     "testEcho") == 1);
    const auto* echo = method(m, "testEcho");
    REQUIRE(echo != nullptr);
    CHECK(std::count(echo->called_idents.begin(), echo->called_idents.end(), "testEcho") == 0);
}

TEST_CASE("field initializers and statements are not method declarations") {
    const auto m = extract("A.java",
                           "class A {\n"
                           "  int x = compute();\n"
                           "  private Runnable r = () -> { helper(); };\n"
                           "  static { setup(); }\n"
                           "  public int compute() { return helper(1) + 2; }\n"
                           "}\n");
    CHECK(m.method_count == 1);
    CHECK(m.methods[0].name == "compute");
}

TEST_CASE("nested and anonymous class methods are counted but flagged") {
    const auto m = extract("A.java",
                           "class A {\n"
                           "  public void outer() {\n"
                           "    new Runnable() {\n"
                           "      public void run() { task(); }\n"
                           "    }.run();\n"
                           "  }\n"
                           "  class Inner {\n"
                           "    public void innerMethod() {}\n"
                           "  }\n"
                           "}\n");
    CHECK(m.method_count == 3);
    CHECK(m.has_nested_methods);
    const auto* run = method(m, "run");
    REQUIRE(run != nullptr);
    CHECK(run->nested);
    const auto* outer = method(m, "outer");
    REQUIRE(outer != nullptr);
    CHECK(!outer->nested);
}

TEST_CASE("interface and abstract declarations count") {
    const auto m = extract("I.java",
                           "interface I {\n"
                           "  void testPing();\n"
                           "  int size();\n"
                           "  default int testTwice() { return 2 * size(); }\n"
                           "}\n");
    CHECK(m.method_count == 3);
    CHECK(m.prefix_method_count == 2);
}

TEST_CASE("enums with constant arguments and bodies") {
    const auto m = extract("E.java",
                           "enum E {\n"
                           "  A(1), B(2) {\n"
                           "    public void testOverride() {}\n"
                           "  };\n"
                           "  E(int v) {}\n"
                           "  public void testBase() {}\n"
                           "}\n");
    CHECK(m.prefix_method_count == 2);
    const auto* override_m = method(m, "testOverride");
    REQUIRE(override_m != nullptr);
    CHECK(override_m->nested);
}

TEST_CASE("throws clauses and generics do not confuse the scanner") {
    const auto m = extract("A.java",
                           "class A {\n"
                           "  public <T> java.util.List<T> testListOf(T x) throws Exception {"
                           " return null; }\n"
                           "  public String[] testNames() throws java.io.IOException, Error {"
                           " return null; }\n"
                           "}\n");
    CHECK(m.method_count == 2);
    CHECK(m.prefix_method_count == 2);
}

TEST_CASE("unbalanced braces degrade but still emit metrics") {
    const auto m = extract("A.java",
                           "class A {\n"
                           "  public void testOne() {}\n"
                           "  public void broken() {\n"); // missing closers
    CHECK(m.degraded);
    CHECK(m.method_count == 2);
    CHECK(m.prefix_method_count == 1);
}

TEST_CASE("metrics pipeline fields from path and raw content") {
    const auto m = extract("src/test/java/FooTest.java",
                           "// test test test\nclass FooTest { public void fooTest() {} }\n");
    CHECK(m.path_has_test);
    CHECK(m.test_word_count == 5); // three comment words + FooTest + fooTest
    CHECK(m.suffix_method_count == 1);
}

TEST_CASE("count_lines_of_code ignores blank lines") {
    const auto rec = lex::SourceFileRecord::from_content(
        "A.java", "int a;\n\n   \nint b;\n\t\nint c;");
    CHECK(metrics::count_lines_of_code(rec) == 3);
    const auto empty = lex::SourceFileRecord::from_content("E.java", "");
    CHECK(metrics::count_lines_of_code(empty) == 0);
}

TEST_CASE("a kiloline file reports 1000 non-blank lines") {
    std::string content;
    for (int i = 0; i < 1000; ++i) content += "int v" + std::to_string(i) + ";\n";
    const auto rec = lex::SourceFileRecord::from_content("Big.java", content);
    CHECK(metrics::count_lines_of_code(rec) == 1000);
}

TEST_CASE("extraction is deterministic") {
    const std::string content = "class A { @Test public void t() { call(); } }";
    const auto a = extract("A.java", content);
    const auto b = extract("A.java", content);
    CHECK(a.annotation_test_count == b.annotation_test_count);
    CHECK(a.method_count == b.method_count);
    CHECK(a.methods.size() == b.methods.size());
}
