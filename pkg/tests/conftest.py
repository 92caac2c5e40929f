"""
pytest wiring: configures Django the way ``tests/settings.py`` does through
django-app-helper, so the suite also runs under plain pytest.
"""
import django
from django.conf import settings

from tests.settings import HELPER_SETTINGS


def pytest_configure(config):
    if settings.configured:
        return
    options = dict(HELPER_SETTINGS)
    options['INSTALLED_APPS'] = [
        'django.contrib.admin',
        'django.contrib.auth',
        'django.contrib.contenttypes',
        'django.contrib.messages',
        'django.contrib.sessions',
        'django.contrib.staticfiles',
    ] + list(options['INSTALLED_APPS'])
    options.setdefault('DATABASES', {
        'default': {'ENGINE': 'django.db.backends.sqlite3', 'NAME': ':memory:'},
    })
    options.setdefault('ROOT_URLCONF', 'tests.urls')
    options.setdefault('STATIC_URL', '/static/')
    options.setdefault('DEFAULT_AUTO_FIELD', 'django.db.models.AutoField')
    options.setdefault('MIDDLEWARE', [
        'django.contrib.sessions.middleware.SessionMiddleware',
        'django.middleware.common.CommonMiddleware',
        'django.middleware.csrf.CsrfViewMiddleware',
        'django.contrib.auth.middleware.AuthenticationMiddleware',
        'django.contrib.messages.middleware.MessageMiddleware',
    ])
    options.setdefault('TEMPLATES', [{
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'APP_DIRS': True,
        'OPTIONS': {'context_processors': [
            'django.template.context_processors.debug',
            'django.template.context_processors.request',
            'django.contrib.auth.context_processors.auth',
            'django.contrib.messages.context_processors.messages',
        ]},
    }])
    settings.configure(**options)
    django.setup()

    from django.test.utils import setup_databases, setup_test_environment
    setup_test_environment()
    config._salmonrun_db = setup_databases(verbosity=0, interactive=False)


def pytest_unconfigure(config):
    db = getattr(config, '_salmonrun_db', None)
    if db is not None:
        from django.test.utils import teardown_databases, teardown_test_environment
        teardown_databases(db, verbosity=0)
        teardown_test_environment()
