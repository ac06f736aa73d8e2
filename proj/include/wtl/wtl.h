#ifndef WTL_WTL_H
#define WTL_WTL_H

/* C interface to the automaton library. Handles are opaque; every function
 * that can fail returns a wtl_status and leaves a message for
 * wtl_last_error() on the calling thread. Strings returned through out
 * parameters are released with wtl_string_free. */

#include <stddef.h>

#if defined(WTL_BUILDING)
#define WTL_API __attribute__((visibility("default")))
#else
#define WTL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wtl_automaton wtl_automaton;
typedef struct wtl_report wtl_report;

typedef enum wtl_status {
  WTL_OK = 0,
  WTL_ERR_PARSE = 1,        /* malformed text or invalid automaton */
  WTL_ERR_IO = 2,           /* file could not be read */
  WTL_ERR_ARGUMENT = 3,     /* null pointer, bad word, bound too large */
  WTL_ERR_PRECONDITION = 4, /* non-binary alphabet, non-constant input, ... */
  WTL_ERR_INTERNAL = 5
} wtl_status;

typedef enum wtl_jump_class { WTL_CONSTANT = 0, WTL_LINEAR = 1 } wtl_jump_class;

typedef enum wtl_equivalence {
  WTL_EQUAL = 0,
  WTL_NOT_EQUAL = 1,
  WTL_NOT_APPLICABLE = 2
} wtl_equivalence;

typedef struct wtl_options {
  size_t max_len;      /* default 12 */
  size_t verify_depth; /* default 8 */
} wtl_options;

WTL_API const char* wtl_last_error(void);
WTL_API const char* wtl_status_string(wtl_status status);
WTL_API void wtl_options_init(wtl_options* opts);
WTL_API void wtl_string_free(char* s);

/* Automata */
WTL_API wtl_status wtl_automaton_from_text(const char* text, wtl_automaton** out);
WTL_API wtl_status wtl_automaton_from_file(const char* path, wtl_automaton** out);
WTL_API void wtl_automaton_free(wtl_automaton* m);
WTL_API wtl_status wtl_automaton_to_text(const wtl_automaton* m, char** out);
WTL_API size_t wtl_automaton_num_states(const wtl_automaton* m);
WTL_API size_t wtl_automaton_num_letters(const wtl_automaton* m);

/* Words use the command-line syntax: "ab", "a b", "" or "-" for the empty
 * word. `jumps` may be null and is set only for accepted words. */
WTL_API wtl_status wtl_accepts(const wtl_automaton* m, const char* word, int* accepted,
                               size_t* jumps);
WTL_API wtl_status wtl_classify(const wtl_automaton* m, wtl_jump_class* out);
WTL_API wtl_status wtl_is_regular(const wtl_automaton* m, int* regular);
WTL_API wtl_status wtl_equivalent(const wtl_automaton* a, const wtl_automaton* b,
                                  wtl_equivalence* out, char** witness);

/* Commands. These never return null except on allocation failure; errors
 * are reported inside the report with a non-zero exit code. `opts` may be
 * null for the defaults. */
WTL_API wtl_report* wtl_cmd_validate(const char* path);
WTL_API wtl_report* wtl_cmd_run(const char* path, const char* word);
WTL_API wtl_report* wtl_cmd_jc(const char* path, const char* word);
WTL_API wtl_report* wtl_cmd_profile(const char* path, const wtl_options* opts);
WTL_API wtl_report* wtl_cmd_classify(const char* path, const wtl_options* opts);
WTL_API wtl_report* wtl_cmd_regular(const char* path, const wtl_options* opts);
WTL_API wtl_report* wtl_cmd_equiv(const char* left, const char* right);
WTL_API wtl_report* wtl_cmd_to_nfa(const char* path);
WTL_API wtl_report* wtl_report_error(const char* command, int exit_code, const char* message);

/* Report accessors; returned strings live as long as the report. */
WTL_API const char* wtl_report_verdict(const wtl_report* r);
WTL_API const char* wtl_report_text(const wtl_report* r);
WTL_API const char* wtl_report_json(const wtl_report* r);
WTL_API const char* wtl_report_artifact(const wtl_report* r); /* null when absent */
WTL_API int wtl_report_exit_code(const wtl_report* r);
WTL_API void wtl_report_free(wtl_report* r);

#ifdef __cplusplus
}
#endif

#endif /* WTL_WTL_H */
