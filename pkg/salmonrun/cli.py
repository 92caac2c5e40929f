"""
The ``salmonrun`` executable. Outside a Django project it configures a
minimal one and forwards to the management commands::

    salmonrun run --algo tgsr --fn sphere --dim 30 --seed 1
    salmonrun experiment table2 --out results/table2
    salmonrun list

Inside a project (``DJANGO_SETTINGS_MODULE`` set) the project's settings
are used as they are.
"""
import os
import sys


COMMANDS = {
    'run': 'optimize',
    'experiment': 'run_experiment',
    'list': 'list_optimizers',
}
LOG_LEVELS = {0: 'ERROR', 1: 'WARNING', 2: 'INFO', 3: 'DEBUG'}


def _verbosity(argv):
    for index, arg in enumerate(argv):
        if arg in ('-v', '--verbosity') and index + 1 < len(argv):
            value = argv[index + 1]
        elif arg.startswith('--verbosity='):
            value = arg.split('=', 1)[1]
        elif arg.startswith('-v') and len(arg) > 2:
            value = arg[2:]
        else:
            continue
        try:
            return int(value)
        except ValueError:
            return 1
    return 1


def configure(verbosity=1):
    from django.conf import settings

    if settings.configured or os.environ.get('DJANGO_SETTINGS_MODULE'):
        return
    level = LOG_LEVELS.get(verbosity, 'DEBUG')
    settings.configure(
        INSTALLED_APPS=['salmonrun'],
        DATABASES={'default': {'ENGINE': 'django.db.backends.sqlite3', 'NAME': ':memory:'}},
        USE_TZ=True,
        SALMONRUN_ENABLE_LOGGING=True,
        LOGGING={
            'version': 1,
            'disable_existing_loggers': False,
            'formatters': {'plain': {'format': '%(levelname)s %(name)s: %(message)s'}},
            'handlers': {'console': {'class': 'logging.StreamHandler', 'formatter': 'plain'}},
            'loggers': {'salmonrun': {'handlers': ['console'], 'level': level}},
        },
    )


def main(argv=None):
    import django
    from django.core.management import execute_from_command_line

    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] in COMMANDS:
        argv[0] = COMMANDS[argv[0]]
    elif argv and argv[0] not in COMMANDS.values() and not argv[0].startswith('-') and argv[0] != 'help':
        sys.stderr.write(f"Unknown command '{argv[0]}', choose one of: {', '.join(COMMANDS)}\n")
        return 2
    configure(_verbosity(argv))
    django.setup()
    execute_from_command_line(['salmonrun'] + argv)
    return 0


if __name__ == '__main__':
    sys.exit(main())
